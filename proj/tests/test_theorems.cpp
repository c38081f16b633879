#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sti/families.hpp"
#include "sti/metrics.hpp"
#include "sti/search.hpp"
#include "sti/theorems.hpp"

using namespace sti;

namespace {

void check_holds(const TheoremVerdict& v) {
  INFO(v.theorem_id << " " << v.details.dump());
  CHECK(v.applicable);
  CHECK(v.holds);
  CHECK_FALSE(v.witness);
}

Graph spider_211() { return Graph(5, {{0, 1}, {1, 2}, {0, 3}, {0, 4}}); }

}  // namespace

TEST_CASE("check_base") {
  const auto wheel = check_base(alternating_wheel(4));
  check_holds(wheel);
  CHECK(wheel.details["n"] == 9);
  CHECK(wheel.details["k"] == 3);

  const auto k13 = check_base(star(3));
  check_holds(k13);
  CHECK(k13.details["small_exception"] == true);
  CHECK(k13.details["two_connected"] == false);

  const auto am = check_base(amalgamation(cycle(4), 0, 2));
  check_holds(am);
  CHECK(am.details["cut_vertices"] == 1);
  CHECK_FALSE(am.details.contains("small_exception"));

  // K_{2,3} has non-adjacent twins and still satisfies the check.
  const auto k23 = check_base(complete_bipartite(2, 3));
  check_holds(k23);
  CHECK(k23.details["twin_pairs"] == 4);
  CHECK(k23.details["adjacent_twin_pairs"] == 0);

  const auto c6 = check_base(cycle(6));
  CHECK_FALSE(c6.applicable);
  CHECK(c6.holds);
  CHECK_FALSE(check_base(Graph(4, {{0, 1}, {2, 3}})).applicable);
}

TEST_CASE("generalized STI graphs with non-adjacent twins") {
  for (const Graph& g : {path(3), star(3), complete_bipartite(2, 3), gamma_graph(2, 2)}) {
    CHECK(classify(g).generalized_sti);
    const auto twins = twin_pairs(g);
    CHECK_FALSE(twins.empty());
    for (const Edge& t : twins) CHECK_FALSE(g.adjacent(t.u, t.v));
    check_holds(check_base(g));
  }
}

TEST_CASE("check_order_bound") {
  const auto k15 = check_order_bound(star(5));
  check_holds(k15);
  CHECK(k15.details["equality"] == true);
  const auto gamma = check_order_bound(gamma_graph(2, 2));
  check_holds(gamma);
  CHECK(gamma.details["equality"] == false);
  CHECK(gamma.details["bound"] == 10);
  const auto p3 = check_order_bound(path(3));
  check_holds(p3);
  CHECK(p3.details["equality"] == true);
}

TEST_CASE("check_diameter") {
  const auto k62 = check_diameter(complete_bipartite(6, 2));
  check_holds(k62);
  CHECK(k62.details["diameter"] == 2);
  CHECK(k62.details["upper_bound"] == 5);
  CHECK(k62.details["lower_equality"] == true);

  const auto am = check_diameter(amalgamation(cycle(4), 0, 2));
  check_holds(am);
  CHECK(am.details["diameter"] == 4);
  CHECK(am.details["upper_bound"] == 4);

  const auto h = check_diameter(h_graph(2, 3));
  check_holds(h);
  CHECK(h.details["upper_bound"] == 9);

  CHECK_FALSE(check_diameter(star(3)).applicable);
}

TEST_CASE("check_tree") {
  const auto k17 = check_tree(star(7));
  check_holds(k17);
  CHECK(k17.details["k"] == 6);
  CHECK(k17.details["generalized_sti"] == true);
  const auto p5 = check_tree(path(5));
  check_holds(p5);
  CHECK(p5.details["generalized_sti"] == false);
  const auto spider = check_tree(spider_211());
  check_holds(spider);
  CHECK(spider.details["generalized_sti"] == false);
  CHECK_THROWS_AS(check_tree(cycle(5)), GraphError);
}

TEST_CASE("check_product") {
  const auto p3 = check_product(path(3), path(3));
  check_holds(p3);
  CHECK(p3.details["k_product"] == 3);
  const auto k13 = check_product(star(3), star(3));
  check_holds(k13);
  CHECK(k13.details["k_product"] == 8);
  const auto mixed = check_product(star(4), complete_bipartite(2, 3));
  check_holds(mixed);
  CHECK(mixed.details["factors_common_k"] == false);
  CHECK(mixed.details["k_product"].is_null());
  CHECK_THROWS_AS(check_product(path(3), path(4)), GraphError);
}

TEST_CASE("check_product over every pair of connected graphs with equal order n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    const auto graphs = enumerate_connected(n);
    for (const Graph& g : graphs) {
      for (const Graph& h : graphs) {
        const auto v = check_product(g, h);
        REQUIRE(v.holds);
        CHECK(v.details["transmission_formula"] == true);

        // Independent check of the product transmission formula.
        const auto tg = oracle::transmissions(g);
        const auto th = oracle::transmissions(h);
        const auto tgh = oracle::transmissions(cartesian_product(g, h));
        for (int x = 0; x < n; ++x) {
          for (int u = 0; u < n; ++u) {
            CHECK(tgh[static_cast<std::size_t>(x * n + u)] ==
                  tg[static_cast<std::size_t>(x)] * n + th[static_cast<std::size_t>(u)] * n);
          }
        }
      }
    }
  }
}

TEST_CASE("check_amalgamation") {
  const auto c4 = check_amalgamation(cycle(4), 0, 2);
  check_holds(c4);
  CHECK(c4.details["k"] == 3);
  const auto c8 = check_amalgamation(cycle(8), 3, 2);
  check_holds(c8);
  CHECK(c8.details["k"] == 7);
  const auto k22 = check_amalgamation(complete_bipartite(2, 2), 1, 3);
  check_holds(k22);
  CHECK(k22.details["k"] == 6);
  CHECK_FALSE(check_amalgamation(path(4), 0, 2).applicable);
  CHECK_FALSE(check_amalgamation(cycle(5), 0, 2).applicable);
}

TEST_CASE("check_entringer") {
  for (int n = 1; n <= 10; ++n) {
    for (const Graph& t : enumerate_trees(n)) check_holds(check_entringer(t));
  }
  check_holds(check_entringer(cycle(12)));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(rng() % 11);
    const auto v = check_entringer(oracle::random_connected_bipartite(rng, n, 0.3));
    REQUIRE(v.holds);
    CHECK(v.applicable);
  }
  CHECK_FALSE(check_entringer(cycle(7)).applicable);
}

TEST_CASE("check_girth_conjecture") {
  const auto p3 = check_girth_conjecture(path(3));
  CHECK(p3.applicable);
  CHECK(p3.holds);
  CHECK(p3.details["acyclic_exception"] == true);
  const auto k23 = check_girth_conjecture(complete_bipartite(2, 3));
  check_holds(k23);
  CHECK(k23.details["girth"] == 4);
  CHECK_FALSE(check_girth_conjecture(star(3)).applicable);
}

TEST_CASE("every check holds on the connected generalized STI graphs with n <= 8") {
  std::size_t sti = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : enumerate_connected(n, true)) {
      if (!classify(g).generalized_sti) continue;
      ++sti;
      for (const auto& v : {check_base(g), check_order_bound(g), check_diameter(g),
                            check_girth_conjecture(g)}) {
        INFO(to_graph6(g) << " " << v.theorem_id);
        CHECK(v.holds);
      }
      if (is_tree(g)) check_holds(check_tree(g));
    }
  }
  CHECK(sti == 16);
}

TEST_CASE("verdicts are deterministic and witnessed") {
  const Graph g = gamma_graph(2, 3);
  CHECK(to_json(check_base(g), g) == to_json(check_base(g), g));
  const auto j = to_json(check_diameter(g), g);
  CHECK(j["theorem_id"] == "diameter");
  CHECK(j["graph6"] == to_graph6(g));
  CHECK(j["witness"].is_null());

  TheoremVerdict v;
  v.violate("first");
  v.violate("second");
  CHECK_FALSE(v.holds);
  CHECK(v.witness == "first; second");
}
