#include "sti/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace sti {
namespace {

void check_order(int n) {
  if (n < 1 || n > Graph::kMaxOrder) {
    throw GraphError("graph order " + std::to_string(n) + " outside [1, 64]");
  }
}

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
}

// Vertices reachable from `source`, one frontier word at a time.
Row reach(const Graph& g, int source) {
  Row seen = bit(source);
  Row frontier = seen;
  while (frontier != 0) {
    Row next = 0;
    for (Row f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    frontier = next & ~seen;
    seen |= frontier;
  }
  return seen;
}

struct LowLink {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<Edge> bridges;
  std::vector<bool> cut;
  int clock = 0;

  explicit LowLink(const Graph& graph)
      : g(graph),
        disc(static_cast<std::size_t>(graph.order()), -1),
        low(static_cast<std::size_t>(graph.order()), 0),
        cut(static_cast<std::size_t>(graph.order()), false) {}

  void visit(int v, int parent) {
    const auto sv = static_cast<std::size_t>(v);
    disc[sv] = low[sv] = clock++;
    int children = 0;
    for (Row r = g.neighbors(v); r != 0; r &= r - 1) {
      const int w = std::countr_zero(r);
      const auto sw = static_cast<std::size_t>(w);
      if (w == parent) continue;
      if (disc[sw] >= 0) {
        low[sv] = std::min(low[sv], disc[sw]);
        continue;
      }
      ++children;
      visit(w, v);
      low[sv] = std::min(low[sv], low[sw]);
      if (low[sw] > disc[sv]) bridges.push_back({std::min(v, w), std::max(v, w)});
      if (parent >= 0 && low[sw] >= disc[sv]) cut[sv] = true;
    }
    if (parent < 0 && children > 1) cut[sv] = true;
  }
};

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges) {
  check_order(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an out-of-range endpoint");
    }
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    rows_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    rows_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
}

Graph Graph::from_rows(std::vector<Row> rows) {
  const int n = static_cast<int>(rows.size());
  check_order(n);
  const Row valid = low_mask(n);
  for (int i = 0; i < n; ++i) {
    const Row r = rows[static_cast<std::size_t>(i)];
    if ((r & ~valid) != 0) throw GraphError("adjacency row points past n-1");
    if ((r >> i) & 1U) throw GraphError("self-loop at vertex " + std::to_string(i));
    for (Row x = r; x != 0; x &= x - 1) {
      const int j = std::countr_zero(x);
      if (((rows[static_cast<std::size_t>(j)] >> i) & 1U) == 0) {
        throw GraphError("adjacency rows are not symmetric");
      }
    }
  }
  return Graph(std::move(rows));
}

int Graph::size() const {
  int twice = 0;
  for (Row r : rows_) twice += std::popcount(r);
  return twice / 2;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::min_degree() const {
  int best = std::numeric_limits<int>::max();
  for (Row r : rows_) best = std::min(best, std::popcount(r));
  return best;
}

Row Graph::all_vertices() const { return low_mask(order()); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (Row r = neighbors(u) & ~low_mask(u + 1); r != 0; r &= r - 1) {
      out.push_back({u, std::countr_zero(r)});
    }
  }
  return out;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  const int n = order();
  if (static_cast<int>(perm.size()) != n) throw GraphError("permutation size mismatch");
  std::vector<Row> out(static_cast<std::size_t>(n), 0);
  Row used = 0;
  for (int v = 0; v < n; ++v) {
    const int pv = perm[static_cast<std::size_t>(v)];
    if (pv < 0 || pv >= n || ((used >> pv) & 1U)) throw GraphError("not a permutation");
    used |= bit(pv);
  }
  for (int v = 0; v < n; ++v) {
    Row mapped = 0;
    for (Row r = neighbors(v); r != 0; r &= r - 1) {
      mapped |= bit(perm[static_cast<std::size_t>(std::countr_zero(r))]);
    }
    out[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = mapped;
  }
  return Graph(std::move(out));
}

Graph Graph::with_vertex(Row nbrs) const {
  const int n = order();
  check_order(n + 1);
  if ((nbrs & ~low_mask(n)) != 0) throw GraphError("neighbour set points past n-1");
  std::vector<Row> out(rows_);
  for (Row r = nbrs; r != 0; r &= r - 1) {
    out[static_cast<std::size_t>(std::countr_zero(r))] |= bit(n);
  }
  out.push_back(nbrs);
  return Graph(std::move(out));
}

Graph Graph::induced(Row keep) const {
  keep &= all_vertices();
  std::vector<int> index(static_cast<std::size_t>(order()), -1);
  int next = 0;
  for (Row r = keep; r != 0; r &= r - 1) index[static_cast<std::size_t>(std::countr_zero(r))] = next++;
  check_order(next);
  std::vector<Row> out(static_cast<std::size_t>(next), 0);
  for (Row r = keep; r != 0; r &= r - 1) {
    const int v = std::countr_zero(r);
    Row mapped = 0;
    for (Row x = neighbors(v) & keep; x != 0; x &= x - 1) {
      mapped |= bit(index[static_cast<std::size_t>(std::countr_zero(x))]);
    }
    out[static_cast<std::size_t>(index[static_cast<std::size_t>(v)])] = mapped;
  }
  return Graph(std::move(out));
}

bool is_connected(const Graph& g) { return reach(g, 0) == g.all_vertices(); }

std::optional<Bipartition> bipartition(const Graph& g) {
  require_connected(g);
  Row side_a = bit(0);
  Row side_b = 0;
  Row frontier = side_a;
  bool on_a = true;
  while (frontier != 0) {
    Row next = 0;
    for (Row f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
    Row& same = on_a ? side_a : side_b;
    Row& other = on_a ? side_b : side_a;
    if ((next & same) != 0) return std::nullopt;
    frontier = next & ~other;
    other |= frontier;
    on_a = !on_a;
  }
  return Bipartition{side_a, side_b};
}

std::vector<Edge> twin_pairs(const Graph& g) {
  std::vector<Edge> out;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if ((g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u))) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<Edge> bridges(const Graph& g) {
  require_connected(g);
  LowLink ll(g);
  ll.visit(0, -1);
  std::sort(ll.bridges.begin(), ll.bridges.end());
  return ll.bridges;
}

std::vector<int> articulation_points(const Graph& g) {
  require_connected(g);
  LowLink ll(g);
  ll.visit(0, -1);
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v) {
    if (ll.cut[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

bool is_two_edge_connected(const Graph& g) {
  return g.order() >= 2 && bridges(g).empty();
}

bool is_two_connected(const Graph& g) {
  return g.order() >= 3 && articulation_points(g).empty();
}

bool is_tree(const Graph& g) {
  return g.size() == g.order() - 1 && is_connected(g);
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> queue(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int x = queue[head++];
      const auto sx = static_cast<std::size_t>(x);
      if (2 * dist[sx] >= best) break;
      for (Row r = g.neighbors(x); r != 0; r &= r - 1) {
        const int y = std::countr_zero(r);
        const auto sy = static_cast<std::size_t>(y);
        if (dist[sy] < 0) {
          dist[sy] = dist[sx] + 1;
          parent[sy] = x;
          queue[tail++] = y;
        } else if (parent[sx] != y) {
          best = std::min(best, dist[sx] + dist[sy] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.order()), d_(static_cast<std::size_t>(g.order() * g.order()), 0) {
  const Row everything = g.all_vertices();
  for (int u = 0; u < n_; ++u) {
    Row seen = bit(u);
    Row frontier = seen;
    int level = 0;
    while (frontier != 0) {
      ++level;
      Row next = 0;
      for (Row f = frontier; f != 0; f &= f - 1) next |= g.neighbors(std::countr_zero(f));
      frontier = next & ~seen;
      seen |= frontier;
      for (Row f = frontier; f != 0; f &= f - 1) {
        d_[static_cast<std::size_t>(u * n_ + std::countr_zero(f))] = level;
      }
    }
    if (seen != everything) throw DisconnectedGraph();
  }
}

int eccentricity(const Graph& g, int u) {
  check_vertex(g, u);
  const DistanceMatrix d(g);
  const auto row = d.row(u);
  return *std::max_element(row.begin(), row.end());
}

int diameter(const DistanceMatrix& d) {
  int best = 0;
  for (int u = 0; u < d.order(); ++u) {
    for (int x : d.row(u)) best = std::max(best, x);
  }
  return best;
}

int diameter(const Graph& g) { return diameter(DistanceMatrix(g)); }

Graph cartesian_product(const Graph& g, const Graph& h) {
  require_connected(g);
  require_connected(h);
  const int ng = g.order();
  const int nh = h.order();
  if (ng * nh > Graph::kMaxOrder) {
    throw GraphError("product order " + std::to_string(ng * nh) + " exceeds 64");
  }
  std::vector<Edge> edges;
  for (int x = 0; x < ng; ++x) {
    for (const Edge& e : h.edges()) edges.push_back({x * nh + e.u, x * nh + e.v});
  }
  for (const Edge& e : g.edges()) {
    for (int u = 0; u < nh; ++u) edges.push_back({e.u * nh + u, e.v * nh + u});
  }
  return Graph(ng * nh, edges);
}

}  // namespace sti
