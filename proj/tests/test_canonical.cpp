#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "sti/canonical.hpp"
#include "sti/families.hpp"
#include "sti/search.hpp"

using namespace sti;

TEST_CASE("canonical form is invariant under relabelling") {
  std::mt19937_64 rng(99);
  std::vector<Graph> samples{path(4),          cycle(6),         complete_bipartite(3, 3),
                             star(5),          gamma_graph(2, 2), alternating_wheel(4),
                             amalgamation(cycle(4), 1, 3),     cartesian_product(path(2), cycle(4)),
                             Graph(1, {}),     Graph(3, {{0, 1}})};
  for (int i = 0; i < 10; ++i) samples.push_back(oracle::random_connected(rng, 5 + i, 0.3));
  for (const Graph& g : samples) {
    const auto base = canonical_form(g);
    for (int t = 0; t < 100; ++t) {
      const Graph h = g.relabeled(oracle::random_permutation(rng, g.order()));
      REQUIRE(canonical_form(h) == base);
    }
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  CHECK(canonical_form(cycle(6)) != canonical_form(complete_bipartite(3, 3)));
  CHECK(canonical_form(path(4)) != canonical_form(star(3)));
  // Same degree sequence: C_6 versus two triangles.
  const Graph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(canonical_form(cycle(6)) != canonical_form(triangles));
}

TEST_CASE("the 11 graphs on 4 vertices have 11 distinct certificates") {
  std::set<std::vector<bool>> brute;
  std::set<CanonicalForm> ours;
  for (const Graph& g : oracle::labelled_graphs(4)) {
    brute.insert(oracle::brute_certificate(g));
    ours.insert(canonical_form(g));
  }
  CHECK(brute.size() == 11);
  CHECK(ours.size() == 11);
}

TEST_CASE("canonical classes match brute force on all labelled 5-vertex graphs") {
  std::map<std::vector<bool>, CanonicalForm> seen;
  for (const Graph& g : oracle::labelled_graphs(5)) {
    const auto cert = oracle::brute_certificate(g);
    const auto form = canonical_form(g);
    auto [it, inserted] = seen.emplace(cert, form);
    REQUIRE(it->second == form);
  }
  std::set<CanonicalForm> distinct;
  for (const auto& [cert, form] : seen) distinct.insert(form);
  CHECK(seen.size() == 34);
  CHECK(distinct.size() == 34);
}

TEST_CASE("canonical form order cap") {
  CHECK_NOTHROW(canonical_form(cycle(16)));
  CHECK_THROWS_AS(canonical_form(cycle(17)), GraphError);
  // The uncapped labelling still works for larger graphs.
  std::mt19937_64 rng(5);
  CHECK(isomorphic(cycle(30), cycle(30).relabeled(oracle::random_permutation(rng, 30))));
}

TEST_CASE("isomorphic") {
  CHECK(isomorphic(complete_bipartite(1, 3), star(3)));
  std::mt19937_64 rng(17);
  const Graph h = h_graph(2, 3);
  CHECK(isomorphic(h, h.relabeled(oracle::random_permutation(rng, h.order()))));
  CHECK_FALSE(isomorphic(gamma_graph(3, 3), h_graph(3, 3)));
  CHECK_FALSE(isomorphic(path(4), path(5)));
}

TEST_CASE("automorphism group sizes") {
  CHECK(automorphism_group(cycle(6)).size() == 12);
  CHECK(automorphism_group(complete_bipartite(3, 3)).size() == 72);
  CHECK(automorphism_group(star(4)).size() == 24);
  CHECK(automorphism_group(path(4)).size() == 2);
  CHECK(automorphism_group(Graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 4}})).size() == 2);
  // Cube Q_3.
  const Graph q3 = cartesian_product(cartesian_product(path(2), path(2)), path(2));
  CHECK(automorphism_group(q3).size() == 48);
  for (const auto& gamma : automorphism_group(q3)) CHECK(q3.relabeled(gamma) == q3);
}

TEST_CASE("coloured canonical labelling distinguishes vertex orbits") {
  const Graph p4 = path(4);
  auto marked = [&](int v) {
    std::vector<int> colours(4, 1);
    colours[static_cast<std::size_t>(v)] = 0;
    return canonical_graph(p4, colours);
  };
  CHECK(marked(0) == marked(3));
  CHECK(marked(1) == marked(2));
  CHECK(marked(0) != marked(1));
}
