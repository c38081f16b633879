#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "sti/graph.hpp"

namespace sti {

// Vertex numbering is fixed per constructor so graph6 fixtures stay stable.
// Every constructor throws GraphError on out-of-range parameters.

/// Side A is 0..p-1, side B is p..p+q-1.
Graph complete_bipartite(int p, int q);
/// K_{1,m}; centre 0.
Graph star(int m);
/// P_m on 0-1-...-(m-1).
Graph path(int m);
/// C_m on 0-1-...-(m-1)-0.
Graph cycle(int m);

/// r copies of g glued at u. The shared vertex is 0; copy i (0-based)
/// occupies 1 + i(n-1) .. (i+1)(n-1), listing g's other vertices in order.
Graph amalgamation(const Graph& g, int u, int r);

/// 2q copies of K_{2,p} joined in a ring. v_i is i-1, w_{i,j} is
/// 2q + (i-1)p + (j-1).
Graph gamma_graph(int p, int q);

/// Ring alternating K_{2,p} and K_{2,2} blocks. v_i is i-1; then the
/// w-blocks for i = 1..2q in order, block i holding p vertices (i odd) or 2
/// (i even), each in j order.
Graph h_graph(int p, int q);

/// Path v_1..v_{n-r} plus r vertices each joined to v_1 and v_{n-r};
/// v_i is i-1.
Graph g_graph(int n, int r);

/// Cycle w_1..w_{2m} (w_i is vertex i) with hub 0 joined to every w_i of
/// even i.
Graph alternating_wheel(int m);

enum class Family {
  kCompleteBipartite,
  kStar,
  kPath,
  kCycle,
  kAmalgamation,
  kGamma,
  kHGraph,
  kGGraph,
  kAlternatingWheel,
  kProduct,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::kPath;
  int p = 0;
  int q = 0;
  int r = 0;
  int n = 0;
  int m = 0;
  int root = 0;                 // amalgamation
  std::optional<Graph> operand; // amalgamation, product (left)
  std::optional<Graph> second;  // product (right)
};

Graph build(const FamilySpec& spec);

/// The k the construction is known to produce when the hypotheses of the
/// corresponding result hold; nullopt otherwise.
std::optional<std::int64_t> predicted_k(const FamilySpec& spec);

}  // namespace sti
