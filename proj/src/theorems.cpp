#include "sti/theorems.hpp"

#include <algorithm>
#include <iterator>

#include "sti/canonical.hpp"
#include "sti/families.hpp"
#include "sti/metrics.hpp"

namespace sti {
namespace {

using json = nlohmann::ordered_json;

std::string edge_text(Edge e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

TheoremVerdict named(std::string id) {
  TheoremVerdict v;
  v.theorem_id = std::move(id);
  return v;
}

json nullable(const std::optional<std::int64_t>& x) {
  return x ? json(*x) : json(nullptr);
}

// Verdict for a claim about generalized STI graphs; marks it inapplicable
// when g is disconnected or not generalized STI.
struct StiContext {
  TheoremVerdict verdict;
  std::optional<StiVerdict> sti;
};

StiContext start(const Graph& g, std::string id) {
  StiContext ctx{named(std::move(id)), std::nullopt};
  ctx.verdict.details["n"] = g.order();
  if (!is_connected(g)) {
    ctx.verdict.applicable = false;
    ctx.verdict.details["reason"] = "disconnected";
    return ctx;
  }
  ctx.sti = classify(g);
  ctx.verdict.details["k"] = nullable(ctx.sti->k);
  if (!ctx.sti->generalized_sti) {
    ctx.verdict.applicable = false;
    ctx.verdict.details["reason"] = "not generalized STI";
  }
  return ctx;
}

}  // namespace

void TheoremVerdict::violate(const std::string& why) {
  holds = false;
  witness = witness ? *witness + "; " + why : why;
}

TheoremVerdict check_base(const Graph& g) {
  auto ctx = start(g, "base");
  auto& v = ctx.verdict;
  if (!v.applicable) return v;
  const int n = g.order();
  const std::int64_t k = *ctx.sti->k;

  // Twins share a transmission, which rules them out only across an edge;
  // non-adjacent twins occur in K_{p,q} and are reported, not rejected.
  const bool bip = bipartition(g).has_value();
  const auto twins = twin_pairs(g);
  std::vector<Edge> adjacent_twins;
  std::copy_if(twins.begin(), twins.end(), std::back_inserter(adjacent_twins),
               [&](Edge e) { return g.adjacent(e.u, e.v); });
  v.details["bipartite"] = bip;
  v.details["twin_pairs"] = twins.size();
  v.details["adjacent_twin_pairs"] = adjacent_twins.size();
  if (!bip) v.violate("(i) graph has an odd cycle");
  if (!adjacent_twins.empty()) v.violate("(i) adjacent twins " + edge_text(adjacent_twins.front()));

  if ((n - k) % 2 != 0) {
    v.violate("(ii) n = " + std::to_string(n) + " and k = " + std::to_string(k) +
              " differ in parity");
  }

  const int delta = g.min_degree();
  const auto br = bridges(g);
  v.details["min_degree"] = delta;
  v.details["bridges"] = br.size();
  if (delta >= 2 && !br.empty()) v.violate("(iii) bridge " + edge_text(br.front()));

  const auto cuts = articulation_points(g);
  v.details["cut_vertices"] = cuts.size();
  if (k <= 2) {
    const bool two_connected = is_two_connected(g);
    const bool exception = (n == 3 && isomorphic(g, path(3))) || (n == 4 && isomorphic(g, star(3)));
    v.details["two_connected"] = two_connected;
    v.details["small_exception"] = exception;
    if (!two_connected && !exception) {
      v.violate(cuts.empty() ? std::string("(iv) not 2-connected")
                             : "(iv) cut vertex " + std::to_string(cuts.front()));
    }
  }
  return v;
}

TheoremVerdict check_order_bound(const Graph& g) {
  auto ctx = start(g, "order_bound");
  auto& v = ctx.verdict;
  if (!v.applicable) return v;
  const int n = g.order();
  const std::int64_t k = *ctx.sti->k;
  v.details["bound"] = n - 2;
  v.details["equality"] = (k == n - 2);
  if (k > n - 2) {
    v.violate("k = " + std::to_string(k) + " exceeds n - 2 = " + std::to_string(n - 2));
  } else if (k == n - 2 && !isomorphic(g, star(n - 1))) {
    v.violate("k = n - 2 but graph is not K_{1," + std::to_string(n - 1) + "}");
  }
  return v;
}

TheoremVerdict check_diameter(const Graph& g) {
  auto ctx = start(g, "diameter");
  auto& v = ctx.verdict;
  if (!v.applicable) return v;
  const int n = g.order();
  if (n < 5) {
    v.applicable = false;
    v.details["reason"] = "n < 5";
    return v;
  }
  const std::int64_t k = *ctx.sti->k;
  const int diam = diameter(g);
  v.details["diameter"] = diam;
  v.details["upper_bound"] = (n + k) / 2 - 1;
  if (diam < 2) v.violate("diameter " + std::to_string(diam) + " below 2");
  if (2 * static_cast<std::int64_t>(diam) > n + k - 2) {
    v.violate("diameter " + std::to_string(diam) + " exceeds (n+k)/2 - 1");
  }
  const bool parity_ok = (n + k) % 2 == 0 && k < n;
  const bool is_extremal =
      parity_ok && isomorphic(g, complete_bipartite(static_cast<int>((n + k) / 2),
                                                    static_cast<int>((n - k) / 2)));
  v.details["lower_equality"] = (diam == 2);
  if ((diam == 2) != is_extremal) {
    v.violate(diam == 2 ? "diameter 2 but not K_{(n+k)/2,(n-k)/2}"
                        : "K_{(n+k)/2,(n-k)/2} with diameter other than 2");
  }
  return v;
}

TheoremVerdict check_tree(const Graph& g) {
  if (!is_tree(g)) throw GraphError("check_tree: input is not a tree");
  TheoremVerdict v = named("tree");
  const int n = g.order();
  const auto sti = classify(g);
  const bool is_star = n >= 3 && isomorphic(g, star(n - 1));
  v.details["n"] = n;
  v.details["k"] = nullable(sti.k);
  v.details["generalized_sti"] = sti.generalized_sti;
  v.details["star"] = is_star;
  if (sti.generalized_sti && !is_star) v.violate("generalized STI tree that is not a star");
  if (is_star && !sti.generalized_sti) v.violate("star that is not generalized STI");
  if (is_star && sti.generalized_sti && *sti.k != n - 2) {
    v.violate("star with k = " + std::to_string(*sti.k) + " instead of n - 2");
  }
  return v;
}

TheoremVerdict check_product(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) {
    throw GraphError("check_product: factor orders " + std::to_string(g.order()) + " and " +
                     std::to_string(h.order()) + " differ");
  }
  TheoremVerdict v = named("product");
  const int n = g.order();
  const Graph gh = cartesian_product(g, h);
  const auto tg = transmissions(g);
  const auto th = transmissions(h);
  const auto tgh = transmissions(gh);
  const auto sg = classify(g, tg);
  const auto sh = classify(h, th);
  const auto sgh = classify(gh, tgh);
  v.details["n"] = n;
  v.details["k_left"] = nullable(sg.k);
  v.details["k_right"] = nullable(sh.k);
  v.details["k_product"] = nullable(sgh.k);

  bool formula_ok = true;
  for (int x = 0; x < n && formula_ok; ++x) {
    for (int u = 0; u < n; ++u) {
      const auto lhs = tgh.tr[static_cast<std::size_t>(x * n + u)];
      const auto rhs = tg.tr[static_cast<std::size_t>(x)] * n + th.tr[static_cast<std::size_t>(u)] * n;
      if (lhs != rhs) {
        v.violate("Tr((" + std::to_string(x) + "," + std::to_string(u) + ")) = " +
                  std::to_string(lhs) + " but factor formula gives " + std::to_string(rhs));
        formula_ok = false;
        break;
      }
    }
  }
  v.details["transmission_formula"] = formula_ok;

  const bool factors_common_k = sg.generalized_sti && sh.generalized_sti && sg.k == sh.k;
  v.details["factors_common_k"] = factors_common_k;
  if (factors_common_k && !(sgh.generalized_sti && *sgh.k == n * *sg.k)) {
    v.violate("factors are " + std::to_string(*sg.k) + "-STI but product is not " +
              std::to_string(n * *sg.k) + "-STI");
  }
  if (sgh.generalized_sti && *sgh.k % n == 0) {
    const std::int64_t k = *sgh.k / n;
    if (!(factors_common_k && *sg.k == k)) {
      v.violate("product is " + std::to_string(*sgh.k) + "-STI but factors are not both " +
                std::to_string(k) + "-STI");
    }
  }
  return v;
}

TheoremVerdict check_amalgamation(const Graph& g, int u, int r) {
  TheoremVerdict v = named("amalgamation");
  const int n = g.order();
  v.details["n"] = n;
  v.details["r"] = r;
  v.details["root"] = u;
  auto inapplicable = [&](const char* why) {
    v.applicable = false;
    v.details["reason"] = why;
    return v;
  };
  if (!is_connected(g)) return inapplicable("operand disconnected");
  if (!bipartition(g)) return inapplicable("operand not bipartite");
  if (!is_transmission_regular(g)) return inapplicable("operand not transmission regular");
  if (r < 2 || u < 0 || u >= n) return inapplicable("invalid root or r");
  if (r * (n - 1) + 1 > Graph::kMaxOrder) return inapplicable("order exceeds 64");

  const std::int64_t expected = static_cast<std::int64_t>(r - 1) * (n - 1);
  const auto sti = classify(amalgamation(g, u, r));
  v.details["expected_k"] = expected;
  v.details["k"] = nullable(sti.k);
  v.details["imbalances"] = sti.imbalances;
  if (!(sti.generalized_sti && *sti.k == expected)) {
    v.violate("expected " + std::to_string(expected) + "-STI amalgamation");
  }
  return v;
}

TheoremVerdict check_entringer(const Graph& g) {
  TheoremVerdict v = named("entringer");
  v.details["n"] = g.order();
  if (!is_connected(g) || !bipartition(g)) {
    v.applicable = false;
    v.details["reason"] = "not a connected bipartite graph";
    return v;
  }
  const DistanceMatrix d(g);
  const auto t = transmissions(d);
  std::size_t checked = 0;
  for (const Edge& e : g.edges()) {
    const auto sides = edge_side_counts(g, d, e);
    const auto residual = (t.tr[static_cast<std::size_t>(e.u)] - t.tr[static_cast<std::size_t>(e.v)]) -
                          (static_cast<std::int64_t>(sides.n_v) - sides.n_u);
    ++checked;
    if (residual != 0) {
      v.violate("edge " + edge_text(e) + " residual " + std::to_string(residual));
    }
  }
  v.details["edges"] = checked;
  return v;
}

TheoremVerdict check_girth_conjecture(const Graph& g) {
  auto ctx = start(g, "girth_conjecture");
  auto& v = ctx.verdict;
  if (!v.applicable) return v;
  if (*ctx.sti->k != 1) {
    v.applicable = false;
    v.details["reason"] = "not 1-STI";
    return v;
  }
  const auto gi = girth(g);
  v.details["girth"] = gi ? json(*gi) : json(nullptr);
  v.details["acyclic_exception"] = !gi.has_value();
  if (gi && *gi != 4) {
    v.violate("COUNTEREXAMPLE: 1-STI graph with girth " + std::to_string(*gi));
  }
  return v;
}

nlohmann::ordered_json to_json(const TheoremVerdict& v, const Graph& g) {
  json j;
  j["theorem_id"] = v.theorem_id;
  j["graph6"] = to_graph6(g);
  j["holds"] = v.holds;
  j["applicable"] = v.applicable;
  j["witness"] = v.witness ? json(*v.witness) : json(nullptr);
  j["details"] = v.details;
  return j;
}

}  // namespace sti
