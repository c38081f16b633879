#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "sti/graph.hpp"

namespace sti {

/// Order cap for canonical_form. canonical_labeling itself accepts any
/// order up to Graph::kMaxOrder.
inline constexpr int kCanonicalOrderLimit = 16;

/// graph6 text of the canonically relabelled graph. Equal iff isomorphic.
struct CanonicalForm {
  std::string graph6;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical labelling by colour refinement and individualisation with
/// backtracking. Returns perm with perm[v] = canonical position of v.
///
/// `colours`, when non-empty, is an initial vertex colouring that
/// isomorphisms must preserve; a vertex's colour value is part of the
/// certificate, so colourings are only comparable when they draw from the
/// same values.
std::vector<int> canonical_labeling(const Graph& g, std::span<const int> colours = {});

/// g relabelled by canonical_labeling(g, colours).
Graph canonical_graph(const Graph& g, std::span<const int> colours = {});

/// Every automorphism of g, as permutations gamma with gamma[v] the image
/// of v. The identity comes first. Walks the whole refinement tree, so use
/// it only on small graphs or graphs with small groups.
std::vector<std::vector<int>> automorphism_group(const Graph& g);

/// Throws GraphError when g.order() > kCanonicalOrderLimit.
CanonicalForm canonical_form(const Graph& g);

/// Exact isomorphism test: cheap invariants first, then canonical graphs.
/// Works for every order up to 64.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace sti
