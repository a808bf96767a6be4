#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "twomega/binding.hpp"
#include "twomega/classes.hpp"
#include "twomega/errors.hpp"
#include "twomega/generators.hpp"
#include "twomega/invariants.hpp"
#include "twomega/solvers.hpp"

using namespace twomega;

namespace {

std::vector<std::int64_t> random_weights(int n, rng& r) {
  std::vector<std::int64_t> w(n);
  for (auto& x : w) x = r.uniform(0, 20);
  return w;
}

color_lists random_lists(int n, int k, rng& r) {
  color_lists lists{k, std::vector<std::uint32_t>(n)};
  for (auto& l : lists.lists) l = static_cast<std::uint32_t>(r.uniform(1, (1 << k) - 1));
  return lists;
}

}  // namespace

TEST_CASE("MWIS worked examples", "[solvers][mwis]") {
  // K3 with weights 5, 1, 2 beside K2 with weights 3, 4: best is 5 + 4.
  const graph g = disjoint_union(complete(3), complete(2));
  const weighted_graph wg(g, {5, 1, 2, 3, 4});
  const auto r = mwis_k1q(wg, 2);
  CHECK(r.weight == 9);
  CHECK(r.set == vertex_set{0, 4});
  CHECK(r.components.size() == 2);
  CHECK(mwis_brute(wg).weight == 9);

  CHECK(mwis_k1q(weighted_graph(cycle(5), std::vector<std::int64_t>(5, 1)), 3).weight == 2);
  CHECK(mwis_k1q(weighted_graph(path(5), std::vector<std::int64_t>(5, 1)), 3).weight == 3);
  CHECK(mwis_k1q(weighted_graph(graph(0), {}), 3).weight == 0);
}

TEST_CASE("MWIS level DP rejects inputs outside the class with a certificate", "[solvers][mwis]") {
  const weighted_graph wg(star(3), {1, 1, 1, 1});
  try {
    mwis_k1q(wg, 3);
    FAIL("expected a precondition error");
  } catch (const k1q_precondition_error& e) {
    const auto& w = e.witness();
    CHECK(w.independent.size() == 3);
    CHECK(is_independent(wg.graph, w.independent));
    CHECK(w.independent.is_subset_of(wg.graph.neighbors_of(w.component)));
  }
  CHECK_THROWS_AS(mwis_k1q(wg, 1), argument_error);
}

TEST_CASE("MWIS level DP matches subset enumeration", "[solvers][mwis]") {
  rng r(2024);
  int checked = 0;
  for (int n = 1; n <= 7; ++n)
    for (const graph& g : all_graphs(n, {true, true})) {
      for (int q = 2; q <= 4; ++q) {
        if (!k1q_induced_minor_free(g, q).free) continue;
        const weighted_graph wg(g, random_weights(n, r));
        const auto res = mwis_k1q(wg, q);
        REQUIRE(res.weight == oracle::mwis(g, wg.weights));
        REQUIRE(is_independent(g, res.set));
        REQUIRE(wg.weight_of(res.set) == res.weight);
        for (const auto& comp : res.components)
          for (const vertex_set& level : comp.levels) REQUIRE(oracle::independence_number(induced_subgraph(g, level)) <= q - 1);
        ++checked;
      }
    }
  CHECK(checked > 500);
}

TEST_CASE("brute-force MWIS matches subset enumeration", "[solvers][mwis]") {
  rng r(5);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const graph g = random_graph(12, 0.3, seed);
    const weighted_graph wg(g, random_weights(12, r));
    const auto res = mwis_brute(wg);
    REQUIRE(res.weight == oracle::mwis(g, wg.weights));
    REQUIRE(is_independent(g, res.set));
  }
}

TEST_CASE("nice decompositions keep the decomposition shape", "[solvers][td]") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const graph g = random_graph(9, 0.3, seed);
    const auto tw = treewidth_exact(g);
    const auto nice = make_nice(g, tw.decomposition);
    REQUIRE(nice.nodes[nice.root()].bag.empty());
    for (const auto& node : nice.nodes) {
      REQUIRE(node.bag.size() <= tw.value + 1);
      switch (node.type) {
        case nice_node::kind::leaf:
          REQUIRE(node.children.empty());
          REQUIRE(node.bag.empty());
          break;
        case nice_node::kind::introduce: {
          REQUIRE(node.children.size() == 1);
          vertex_set child = nice.nodes[node.children[0]].bag;
          child.insert(node.v);
          REQUIRE(child == node.bag);
          REQUIRE_FALSE(nice.nodes[node.children[0]].bag.contains(node.v));
          break;
        }
        case nice_node::kind::forget: {
          REQUIRE(node.children.size() == 1);
          vertex_set bag = node.bag;
          bag.insert(node.v);
          REQUIRE(bag == nice.nodes[node.children[0]].bag);
          REQUIRE_FALSE(node.bag.contains(node.v));
          break;
        }
        case nice_node::kind::join:
          REQUIRE(node.children.size() == 2);
          REQUIRE(nice.nodes[node.children[0]].bag == node.bag);
          REQUIRE(nice.nodes[node.children[1]].bag == node.bag);
          break;
      }
      for (int c : node.children) REQUIRE(c < static_cast<int>(&node - nice.nodes.data()));
    }
  }
  tree_decomposition broken{{{0, 1}}, {}};
  CHECK_THROWS_AS(make_nice(path(3), broken), argument_error);
}

TEST_CASE("decomposition DPs match the oracles", "[solvers][td]") {
  rng r(99);
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int n = 3 + static_cast<int>(seed % 6);
    const graph g = random_graph(n, 0.2 + 0.5 * (seed % 5) / 5.0, seed);
    const auto td = treewidth_exact(g).decomposition;

    const weighted_graph wg(g, random_weights(n, r));
    const auto m = mwis_on_td(wg, td);
    REQUIRE(m.weight == oracle::mwis(g, wg.weights));
    REQUIRE(is_independent(g, m.set));

    const int k = 2 + static_cast<int>(seed % 3);
    const auto lists = random_lists(n, k, r);
    const auto coloring = list_coloring_on_td(g, lists, td);
    REQUIRE(coloring.has_value() == oracle::list_colorable(g, k, lists.lists));
    if (coloring) REQUIRE(check_list_coloring(g, lists, *coloring).empty());
    REQUIRE(list_coloring_brute(g, lists).has_value() == coloring.has_value());
  }
}

TEST_CASE("colouring checker catches conflicts and list violations", "[solvers]") {
  const graph g = path(3);
  const auto lists = color_lists::full(3, 2);
  CHECK(check_list_coloring(g, lists, {1, 2, 1}).empty());
  CHECK_FALSE(check_list_coloring(g, lists, {1, 1, 2}).empty());
  CHECK_FALSE(check_list_coloring(g, lists, {1, 3, 1}).empty());
  CHECK_FALSE(check_list_coloring(g, lists, {1, 2}).empty());
  color_lists narrow{2, {1, 3, 1}};
  CHECK_FALSE(check_list_coloring(g, narrow, {2, 1, 2}).empty());
}

TEST_CASE("robust list colouring outcomes", "[solvers][robust]") {
  const auto cactus = parse_binding("block_cactus");
  const auto colored = robust_list_k_coloring(cycle(5), color_lists::full(5, 3), 3, cactus);
  CHECK(colored.result == robust_outcome::kind::colored);
  CHECK(check_list_coloring(cycle(5), color_lists::full(5, 3), colored.coloring).empty());
  CHECK(colored.ceiling == 2);

  const auto k4 = robust_list_k_coloring(complete(4), color_lists::full(4, 3), 3, cactus);
  CHECK(k4.result == robust_outcome::kind::not_colorable);
  REQUIRE(k4.clique);
  CHECK(k4.clique->size() == 4);

  const graph k55 = complete_bipartite(5, 5);
  const auto outside = robust_list_k_coloring(k55, color_lists::full(10, 3), 3, cactus);
  CHECK(outside.result == robust_outcome::kind::not_in_class);

  // An odd cycle with two colours is tw 2 and has no 3-clique, yet fails.
  color_lists two{3, std::vector<std::uint32_t>(5, 3)};
  CHECK(robust_list_k_coloring(cycle(5), two, 3, cactus).result == robust_outcome::kind::not_colorable);

  const auto refused = robust_list_k_coloring(random_graph(40, 0.5, 1), color_lists::full(40, 10), 10,
                                              binding_function::fixed(20), 1);
  CHECK(refused.result == robust_outcome::kind::refused);
  CHECK(to_string(robust_outcome::kind::not_in_class) == "not_in_class");
}

TEST_CASE("clique lower bound from treewidth", "[solvers][approx]") {
  CHECK(clique_lower_bound_from_width(0, 1, 0.5) == 1);
  CHECK(clique_lower_bound_from_width(2, 1, 0.5) == 3);
  CHECK(clique_lower_bound_from_width(7, 1, 0.5) == 4);
  CHECK(clique_lower_bound_from_width(21, 1, 0.5) == 8);
  CHECK(clique_lower_bound_from_width_log(0, 2) == 1);
  CHECK(clique_lower_bound_from_width_log(7, 2) == 3);
  CHECK(clique_lower_bound_from_width_log(8, 2) == 4);
  CHECK_THROWS(clique_lower_bound_from_width(-1, 1, 0.5));
  CHECK_THROWS(clique_lower_bound_from_width(3, 1, 0));

  // Property: the bound is the least m with m^1.5 >= t + 1.
  for (int t = 0; t <= 200; ++t) {
    const int m = clique_lower_bound_from_width(t, 1, 0.5);
    REQUIRE(static_cast<std::int64_t>(m) * m * m >= static_cast<std::int64_t>(t + 1) * (t + 1));
    REQUIRE(static_cast<std::int64_t>(m - 1) * (m - 1) * (m - 1) < static_cast<std::int64_t>(t + 1) * (t + 1));
  }
}

TEST_CASE("clique approximation on chordal graphs", "[solvers][approx]") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const graph g = random_chordal(14, 7, seed);
    const auto r = approx_clique(g);
    const int omega = oracle::clique_number(g);
    REQUIRE(r.omega == omega);
    REQUIRE(r.treewidth == omega - 1);
    REQUIRE(r.lower_bound >= 1);
    REQUIRE(r.lower_bound <= omega);
    REQUIRE(static_cast<double>(omega) / r.lower_bound <= std::pow(omega, 1.0 - 1.0 / 1.5) + 1e-9);
  }
}
