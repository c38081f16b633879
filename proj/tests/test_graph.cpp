#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sti/families.hpp"
#include "sti/graph.hpp"
#include "sti/search.hpp"

using namespace sti;

namespace {

Graph two_disjoint_edges() { return Graph(4, {{0, 1}, {2, 3}}); }

bool symmetric_irreflexive(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u)) return false;
    for (int v = 0; v < g.order(); ++v) {
      if (g.adjacent(u, v) != g.adjacent(v, u)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("new_graph builds the given edge set") {
  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(p3.order() == 3);
  CHECK(p3.size() == 2);
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

  const Graph k13(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(k13.degree(0) == 3);
  CHECK(k13.min_degree() == 1);

  const Graph k1(1, {});
  CHECK(k1.order() == 1);
  CHECK(k1.size() == 0);

  const Graph dup(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.size() == 1);
}

TEST_CASE("new_graph rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{-1, 0}}), GraphError);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
  CHECK_THROWS_AS(Graph(0, {}), GraphError);
  CHECK_THROWS_AS(Graph(65, {}), GraphError);
  CHECK_THROWS_AS(Graph::from_rows({0b10, 0b00}), GraphError);
}

TEST_CASE("constructors keep adjacency symmetric and irreflexive") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = oracle::random_connected(rng, 2 + i % 20, 0.3);
    CHECK(symmetric_irreflexive(g));
    CHECK(symmetric_irreflexive(g.relabeled(oracle::random_permutation(rng, g.order()))));
    CHECK(symmetric_irreflexive(g.with_vertex(0b11)));
  }
  CHECK(symmetric_irreflexive(gamma_graph(3, 3)));
  CHECK(symmetric_irreflexive(cartesian_product(path(3), star(3))));
}

TEST_CASE("is_connected") {
  CHECK(is_connected(path(3)));
  CHECK_FALSE(is_connected(two_disjoint_edges()));
  CHECK(is_connected(gamma_graph(2, 2)));
  CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("bipartition") {
  const auto c6 = bipartition(cycle(6));
  REQUIRE(c6);
  CHECK(std::popcount(c6->side_a) == 3);
  CHECK(std::popcount(c6->side_b) == 3);
  CHECK_FALSE(bipartition(cycle(5)));
  const auto k32 = bipartition(complete_bipartite(3, 2));
  REQUIRE(k32);
  CHECK(std::popcount(k32->side_a) == 3);
  CHECK(std::popcount(k32->side_b) == 2);
  CHECK((k32->side_a & k32->side_b) == 0);
  CHECK_THROWS_AS(bipartition(two_disjoint_edges()), DisconnectedGraph);
}

TEST_CASE("twin_pairs ignores adjacency inside the pair") {
  CHECK(twin_pairs(complete_bipartite(2, 3)).size() == 4);
  CHECK(twin_pairs(path(3)) == std::vector<Edge>{{0, 2}});
  CHECK(twin_pairs(alternating_wheel(4)).empty());
  // Adjacent twins count too.
  CHECK(twin_pairs(Graph(3, {{0, 1}, {1, 2}, {0, 2}})).size() == 3);
  CHECK(twin_pairs(Graph(2, {{0, 1}})).size() == 1);
}

TEST_CASE("bridges and articulation points") {
  const Graph two_squares = amalgamation(cycle(4), 0, 2);
  CHECK(articulation_points(two_squares) == std::vector<int>{0});
  CHECK(bridges(two_squares).empty());

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const Graph tree = oracle::random_connected(rng, 2 + i, 0.0);
    CHECK(bridges(tree).size() == static_cast<std::size_t>(tree.order() - 1));
  }

  CHECK(bridges(cycle(8)).empty());
  CHECK(articulation_points(cycle(8)).empty());
  CHECK(is_two_connected(cycle(8)));
  CHECK(is_two_edge_connected(cycle(8)));
  CHECK_FALSE(is_two_edge_connected(Graph(1, {})));
  CHECK_FALSE(is_two_connected(path(2)));
  CHECK_THROWS_AS(bridges(two_disjoint_edges()), DisconnectedGraph);
  CHECK_THROWS_AS(articulation_points(two_disjoint_edges()), DisconnectedGraph);
}

TEST_CASE("bridges, articulation points and girth match brute force on n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      CHECK(bridges(g) == oracle::bridges(g));
      CHECK(articulation_points(g) == oracle::articulation_points(g));
      CHECK(girth(g) == oracle::girth(g));
    }
  }
}

TEST_CASE("girth") {
  CHECK(girth(cycle(7)) == 7);
  CHECK_FALSE(girth(star(5)));
  CHECK(girth(alternating_wheel(4)) == 4);
  CHECK(girth(Graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 3);
  CHECK(girth(two_disjoint_edges()) == std::nullopt);
  // Forest plus a disjoint triangle.
  CHECK(girth(Graph(5, {{0, 1}, {2, 3}, {3, 4}, {2, 4}})) == 3);
}

TEST_CASE("distance_matrix") {
  const auto p4 = distance_matrix(path(4));
  CHECK(p4(0, 3) == 3);
  CHECK(distance_matrix(complete_bipartite(3, 4))(0, 1) == 2);
  const auto wheel = distance_matrix(alternating_wheel(4));
  CHECK(wheel(0, 5) == 2);
  CHECK(wheel(0, 1) == 2);
  CHECK(wheel(0, 2) == 1);
  CHECK_THROWS_AS(distance_matrix(two_disjoint_edges()), DisconnectedGraph);
}

TEST_CASE("distance_matrix agrees with Floyd-Warshall and is a metric") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + i % 10;
    const Graph g = oracle::random_connected(rng, n, 0.25);
    const auto d = distance_matrix(g);
    const auto ref = oracle::floyd(g);
    for (int u = 0; u < n; ++u) {
      CHECK(d(u, u) == 0);
      for (int v = 0; v < n; ++v) {
        REQUIRE(d(u, v) == ref[u][v]);
        CHECK(d(u, v) == d(v, u));
        CHECK((d(u, v) == 1) == g.adjacent(u, v));
        for (int w = 0; w < n; ++w) CHECK(d(u, v) <= d(u, w) + d(w, v));
      }
    }
  }
}

TEST_CASE("eccentricity and diameter") {
  for (int p = 2; p <= 5; ++p) {
    for (int q = 2; q <= 5; ++q) CHECK(diameter(complete_bipartite(p, q)) == 2);
  }
  CHECK(diameter(amalgamation(cycle(4), 0, 2)) == 4);
  CHECK(diameter(cycle(10)) == 5);
  CHECK(eccentricity(path(5), 2) == 2);
  CHECK(eccentricity(path(5), 0) == 4);
  CHECK_THROWS_AS(eccentricity(path(5), 5), GraphError);
  CHECK_THROWS_AS(diameter(two_disjoint_edges()), DisconnectedGraph);
}

TEST_CASE("cartesian_product") {
  const Graph k2 = path(2);
  const Graph c4 = cartesian_product(k2, k2);
  CHECK(c4.order() == 4);
  CHECK(c4.size() == 4);
  for (int v = 0; v < 4; ++v) CHECK(c4.degree(v) == 2);
  CHECK(is_connected(c4));

  const Graph grid = cartesian_product(path(3), path(3));
  CHECK(grid.order() == 9);
  CHECK(grid.size() == 12);
  CHECK(grid.degree(4) == 4);  // (1,1) is the centre

  const Graph kk = cartesian_product(star(3), star(3));
  CHECK(kk.order() == 16);
  CHECK(kk.degree(0) == 6);   // (centre, centre)
  CHECK(kk.degree(5) == 2);   // (leaf, leaf)

  // (x,u) ~ (x,v) iff uv in H; (x,u) ~ (y,u) iff xy in G.
  const Graph g = path(3);
  const Graph h = star(3);
  const Graph gh = cartesian_product(g, h);
  for (int x = 0; x < 3; ++x) {
    for (int u = 0; u < 4; ++u) {
      for (int y = 0; y < 3; ++y) {
        for (int v = 0; v < 4; ++v) {
          const bool expected = (x == y && h.adjacent(u, v)) || (u == v && g.adjacent(x, y));
          CHECK(gh.adjacent(x * 4 + u, y * 4 + v) == expected);
        }
      }
    }
  }
  CHECK_THROWS_AS(cartesian_product(path(9), path(8)), GraphError);
  CHECK_THROWS_AS(cartesian_product(two_disjoint_edges(), k2), DisconnectedGraph);
}

TEST_CASE("induced subgraph and vertex extension") {
  const Graph c6 = cycle(6);
  const Graph p5 = c6.induced(0b011111);
  CHECK(p5.order() == 5);
  CHECK(p5.size() == 4);
  const Graph back = p5.with_vertex(bit(0) | bit(4));
  CHECK(back == c6);
  CHECK_THROWS_AS(p5.with_vertex(bit(5)), GraphError);
}
