#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "sti/graph.hpp"

namespace sti {

/// Outcome of one machine-checked claim on one graph. A violated claim
/// always carries a witness; an inapplicable claim holds vacuously.
struct TheoremVerdict {
  std::string theorem_id;
  bool applicable = true;
  bool holds = true;
  std::optional<std::string> witness;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();

  void violate(const std::string& why);
};

/// Structural properties of k-STI graphs: bipartite without adjacent twins,
/// n = k (mod 2), 2-edge-connected when min degree >= 2, and 2-connected
/// (or P_3 / K_{1,3}) when k <= 2.
TheoremVerdict check_base(const Graph& g);

/// k <= n - 2, with equality only for K_{1,k+1}.
TheoremVerdict check_order_bound(const Graph& g);

/// For n >= 5: 2 <= diam <= (n+k)/2 - 1, and diam == 2 exactly for
/// K_{(n+k)/2,(n-k)/2}.
TheoremVerdict check_diameter(const Graph& g);

/// A tree is generalized STI iff it is a star with at least two leaves.
/// Throws GraphError when g is not a tree.
TheoremVerdict check_tree(const Graph& g);

/// For equal orders n: G [] H is (nk)-STI iff G and H are both k-STI, plus
/// Tr((x,u)) = Tr(x) n(H) + Tr(u) n(G) on every product vertex. Throws
/// GraphError when the orders differ.
TheoremVerdict check_product(const Graph& g, const Graph& h);

/// rG(u) is ((r-1)(n-1))-STI whenever G is bipartite and transmission
/// regular; inapplicable otherwise.
TheoremVerdict check_amalgamation(const Graph& g, int u, int r);

/// Tr(u) - Tr(v) = n_v(e) - n_u(e) on every edge of a bipartite graph.
TheoremVerdict check_entringer(const Graph& g);

/// Every 1-STI graph that has a cycle has girth 4. Acyclic 1-STI graphs are
/// recorded through details["acyclic_exception"].
TheoremVerdict check_girth_conjecture(const Graph& g);

/// {theorem_id, graph6, holds, applicable, witness, details}
nlohmann::ordered_json to_json(const TheoremVerdict& v, const Graph& g);

}  // namespace sti
