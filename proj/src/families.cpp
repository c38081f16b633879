#include "sti/families.hpp"

#include <array>
#include <utility>
#include <vector>

#include "sti/metrics.hpp"

namespace sti {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

constexpr std::array<std::pair<Family, std::string_view>, 10> kNames{{
    {Family::kCompleteBipartite, "complete_bipartite"},
    {Family::kStar, "star"},
    {Family::kPath, "path"},
    {Family::kCycle, "cycle"},
    {Family::kAmalgamation, "amalgamation"},
    {Family::kGamma, "gamma"},
    {Family::kHGraph, "h_graph"},
    {Family::kGGraph, "g_graph"},
    {Family::kAlternatingWheel, "alternating_wheel"},
    {Family::kProduct, "product"},
}};

const Graph& operand_of(const std::optional<Graph>& g, std::string_view family) {
  require(g.has_value(), std::string(family) + " needs an operand graph");
  return *g;
}

}  // namespace

Graph complete_bipartite(int p, int q) {
  require(p >= 1 && q >= 1 && p + q <= Graph::kMaxOrder,
          "complete_bipartite requires p, q >= 1 and p + q <= 64");
  std::vector<Edge> edges;
  for (int a = 0; a < p; ++a) {
    for (int b = 0; b < q; ++b) edges.push_back({a, p + b});
  }
  return Graph(p + q, edges);
}

Graph star(int m) {
  require(m >= 1 && m + 1 <= Graph::kMaxOrder, "star requires 1 <= m <= 63");
  return complete_bipartite(1, m);
}

Graph path(int m) {
  require(m >= 2 && m <= Graph::kMaxOrder, "path requires 2 <= m <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
  return Graph(m, edges);
}

Graph cycle(int m) {
  require(m >= 3 && m <= Graph::kMaxOrder, "cycle requires 3 <= m <= 64");
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) edges.push_back({i, (i + 1) % m});
  return Graph(m, edges);
}

Graph amalgamation(const Graph& g, int u, int r) {
  const int n = g.order();
  require(is_connected(g), "amalgamation operand must be connected");
  require(u >= 0 && u < n, "amalgamation root out of range");
  require(r >= 2, "amalgamation requires r >= 2");
  require(r * (n - 1) + 1 <= Graph::kMaxOrder, "amalgamation order exceeds 64");
  std::vector<Edge> edges;
  for (int copy = 0; copy < r; ++copy) {
    auto index = [&](int x) {
      if (x == u) return 0;
      return 1 + copy * (n - 1) + (x < u ? x : x - 1);
    };
    for (const Edge& e : g.edges()) edges.push_back({index(e.u), index(e.v)});
  }
  return Graph(r * (n - 1) + 1, edges);
}

Graph gamma_graph(int p, int q) {
  require(p >= 2 && q >= 2 && 2 * q * (p + 1) <= Graph::kMaxOrder,
          "gamma requires p, q >= 2 and 2q(p+1) <= 64");
  auto v = [](int i) { return i - 1; };
  auto w = [&](int i, int j) { return 2 * q + (i - 1) * p + (j - 1); };
  std::vector<Edge> edges;
  for (int j = 1; j <= p; ++j) {
    for (int i = 2; i <= 2 * q - 1; ++i) {
      edges.push_back({v(i), w(i, j)});
      edges.push_back({v(i), w(i - 1, j)});
    }
    edges.push_back({v(1), w(1, j)});
    edges.push_back({v(2 * q), w(2 * q, j)});
    edges.push_back({v(1), w(2 * q, j)});
    edges.push_back({v(2 * q), w(2 * q - 1, j)});
  }
  return Graph(2 * q * (p + 1), edges);
}

Graph h_graph(int p, int q) {
  require(p >= 2 && q >= 2 && q * (p + 4) <= Graph::kMaxOrder,
          "h_graph requires p, q >= 2 and q(p+4) <= 64");
  auto v = [](int i) { return i - 1; };
  // Block i starts after the 2q v-vertices and the blocks 1..i-1; odd
  // blocks hold p vertices and even blocks 2.
  auto w = [&](int i, int j) {
    const int before = i - 1;
    const int odd_before = (before + 1) / 2;
    const int even_before = before / 2;
    return 2 * q + odd_before * p + even_before * 2 + (j - 1);
  };
  std::vector<Edge> edges;
  for (int j = 1; j <= 2; ++j) edges.push_back({v(1), w(2 * q, j)});
  for (int r = 1; r <= q; ++r) {
    for (int j = 1; j <= p; ++j) edges.push_back({v(2 * r - 1), w(2 * r - 1, j)});
    if (r >= 2) {
      for (int j = 1; j <= 2; ++j) edges.push_back({v(2 * r - 1), w(2 * r - 2, j)});
    }
    for (int j = 1; j <= 2; ++j) edges.push_back({v(2 * r), w(2 * r, j)});
    for (int j = 1; j <= p; ++j) edges.push_back({v(2 * r), w(2 * r - 1, j)});
  }
  return Graph(q * (p + 4), edges);
}

Graph g_graph(int n, int r) {
  require(n >= 5 && r >= 2 && n - r >= 3 && n <= Graph::kMaxOrder,
          "g_graph requires n >= 5, r >= 2, n - r >= 3 and n <= 64");
  auto v = [](int i) { return i - 1; };
  std::vector<Edge> edges;
  for (int i = 1; i <= n - r - 1; ++i) edges.push_back({v(i), v(i + 1)});
  for (int j = n - r + 1; j <= n; ++j) {
    edges.push_back({v(1), v(j)});
    edges.push_back({v(n - r), v(j)});
  }
  return Graph(n, edges);
}

Graph alternating_wheel(int m) {
  require(m >= 2 && 2 * m + 1 <= Graph::kMaxOrder, "alternating_wheel requires 2 <= m <= 31");
  std::vector<Edge> edges;
  for (int i = 1; i <= 2 * m; ++i) {
    edges.push_back({i, i % (2 * m) + 1});
    if (i % 2 == 0) edges.push_back({0, i});
  }
  return Graph(2 * m + 1, edges);
}

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [family, known] : kNames) {
    if (known == name) return family;
  }
  if (name == "gamma_graph") return Family::kGamma;
  if (name == "h") return Family::kHGraph;
  if (name == "g") return Family::kGGraph;
  if (name == "wheel") return Family::kAlternatingWheel;
  return std::nullopt;
}

Graph build(const FamilySpec& s) {
  switch (s.family) {
    case Family::kCompleteBipartite: return complete_bipartite(s.p, s.q);
    case Family::kStar: return star(s.m);
    case Family::kPath: return path(s.m);
    case Family::kCycle: return cycle(s.m);
    case Family::kAmalgamation:
      return amalgamation(operand_of(s.operand, "amalgamation"), s.root, s.r);
    case Family::kGamma: return gamma_graph(s.p, s.q);
    case Family::kHGraph: return h_graph(s.p, s.q);
    case Family::kGGraph: return g_graph(s.n, s.r);
    case Family::kAlternatingWheel: return alternating_wheel(s.m);
    case Family::kProduct:
      return cartesian_product(operand_of(s.operand, "product"), operand_of(s.second, "product"));
  }
  throw GraphError("unknown family");
}

std::optional<std::int64_t> predicted_k(const FamilySpec& s) {
  switch (s.family) {
    case Family::kCompleteBipartite:
      if (s.p >= 1 && s.q >= 1 && s.p != s.q) return s.p > s.q ? s.p - s.q : s.q - s.p;
      return std::nullopt;
    case Family::kStar:
      if (s.m >= 2) return s.m - 1;
      return std::nullopt;
    case Family::kPath:
      if (s.m == 3) return 1;
      return std::nullopt;
    case Family::kCycle:
      return std::nullopt;
    case Family::kAmalgamation: {
      if (!s.operand || s.r < 2) return std::nullopt;
      const Graph& g = *s.operand;
      if (!is_connected(g) || !bipartition(g) || !is_transmission_regular(g)) return std::nullopt;
      return static_cast<std::int64_t>(s.r - 1) * (g.order() - 1);
    }
    case Family::kGamma:
      if (s.p >= 2 && s.q >= 2) return 2 * s.p - 2;
      return std::nullopt;
    case Family::kHGraph:
      if (s.p >= 2 && s.q >= 3 && s.q % 2 == 1) return s.p;
      return std::nullopt;
    case Family::kGGraph:
      if (s.n >= 5 && s.r >= 2 && (s.n - (s.r - 1)) % 2 == 0) return s.r - 1;
      return std::nullopt;
    case Family::kAlternatingWheel:
      // m = 2 is K_{2,3}; m = 4 is the 3-STI example with transmissions 12/15/18.
      if (s.m == 2) return 1;
      if (s.m == 4) return 3;
      return std::nullopt;
    case Family::kProduct: {
      if (!s.operand || !s.second) return std::nullopt;
      const Graph& g = *s.operand;
      const Graph& h = *s.second;
      if (g.order() != h.order() || !is_connected(g) || !is_connected(h)) return std::nullopt;
      const auto vg = classify(g);
      const auto vh = classify(h);
      if (vg.generalized_sti && vh.generalized_sti && vg.k == vh.k) {
        return static_cast<std::int64_t>(g.order()) * *vg.k;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace sti
