#include <catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"
#include "twomega/binding.hpp"
#include "twomega/classes.hpp"
#include "twomega/errors.hpp"
#include "twomega/generators.hpp"
#include "twomega/graph_io.hpp"

using namespace twomega;

namespace {

std::vector<graph> iso_graphs(int max_n) {
  std::vector<graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (graph& g : all_graphs(n, {false, true})) out.push_back(std::move(g));
  return out;
}

bool connected_mask(const oracle::small& s, std::uint32_t mask) {
  const std::uint32_t all = (1u << s.n) - 1;
  return oracle::components_without(s, all & ~mask).size() == 1;
}

/// Every maximal 2-connected vertex set (or bridge) induces a cycle or a
/// clique. Blocks are found by subset enumeration.
bool block_cactus_oracle(const graph& g) {
  const oracle::small s(g);
  std::vector<std::uint32_t> candidates;
  for (std::uint32_t mask = 1; mask < (1u << s.n); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k < 2 || !connected_mask(s, mask)) continue;
    bool biconnected = true;
    if (k >= 3)
      for (int v = 0; v < s.n && biconnected; ++v)
        if (mask >> v & 1) biconnected = connected_mask(s, mask & ~(1u << v));
    if (biconnected) candidates.push_back(mask);
  }
  for (std::uint32_t b : candidates) {
    bool maximal = true;
    for (std::uint32_t c : candidates) maximal = maximal && !(c != b && (c & b) == b);
    if (!maximal) continue;
    const int k = __builtin_popcount(b);
    int edges = 0;
    bool two_regular = true;
    for (int v = 0; v < s.n; ++v)
      if (b >> v & 1) {
        const int d = __builtin_popcount(s.adj[v] & b);
        edges += d;
        two_regular = two_regular && d == 2;
      }
    edges /= 2;
    if (edges != k * (k - 1) / 2 && !two_regular) return false;
  }
  return true;
}

/// Forest whose components have at most one vertex of degree 3 and none
/// of higher degree.
bool class_S_oracle(const graph& g) {
  if (g.size() != g.order() - static_cast<int>(components(g).size())) return false;
  for (const vertex_set& c : components(g)) {
    int branch = 0;
    for (vertex v : c.to_vector()) {
      if (g.degree(v) > 3) return false;
      branch += g.degree(v) == 3;
    }
    if (branch > 1) return false;
  }
  return true;
}

bool complete_bipartite_oracle(const graph& g) {
  const int n = g.order();
  for (std::uint32_t side = 0; side < (1u << n); ++side) {
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = u + 1; v < n && ok; ++v) ok = g.adjacent(u, v) == (((side >> u) ^ (side >> v)) & 1);
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("chordality matches hole enumeration", "[classes][chordal]") {
  for (const graph& g : iso_graphs(7)) {
    const auto r = is_chordal(g);
    REQUIRE(r.chordal == !oracle::has_hole(g));
    if (r.chordal) {
      REQUIRE(r.elimination_order.size() == static_cast<std::size_t>(g.order()));
      // Each vertex's later neighbours form a clique.
      std::vector<int> pos(g.order());
      for (int i = 0; i < g.order(); ++i) pos[r.elimination_order[i]] = i;
      for (vertex v = 0; v < g.order(); ++v) {
        vertex_set later;
        for (vertex w : g.neighbors(v).to_vector())
          if (pos[w] > pos[v]) later.insert(w);
        REQUIRE(is_clique(g, later));
      }
    } else {
      const auto& hole = r.hole;
      REQUIRE(hole.size() >= 4);
      const graph h = induced_subgraph(g, vertex_set::from(hole));
      REQUIRE(h.size() == static_cast<int>(hole.size()));
      for (std::size_t i = 0; i < hole.size(); ++i) REQUIRE(g.adjacent(hole[i], hole[(i + 1) % hole.size()]));
    }
  }
  CHECK(is_chordal(cycle(4)).hole.size() == 4);
  CHECK(is_chordal(complete(6)).chordal);
}

TEST_CASE("block-cactus recognition matches the block definition", "[classes][block_cactus]") {
  for (const graph& g : iso_graphs(7)) {
    const auto r = is_block_cactus(g);
    REQUIRE(r.block_cactus == block_cactus_oracle(g));
    REQUIRE(r.offending_block.has_value() == !r.block_cactus);
  }
  CHECK_FALSE(is_block_cactus(complete_minus_edge(4)).block_cactus);
  CHECK(is_block_cactus(cycle(7)).block_cactus);
  CHECK(is_block_cactus(complete(5)).block_cactus);
}

TEST_CASE("class S membership", "[classes][S]") {
  for (const graph& g : iso_graphs(7)) REQUIRE(in_class_S(g) == class_S_oracle(g));
  CHECK(in_class_S(star(3)));
  CHECK(in_class_S(disjoint_union(path(7), subdivided_claw(2, 2, 1))));
  CHECK_FALSE(in_class_S(star(4)));
  CHECK_FALSE(in_class_S(cycle(5)));
}

TEST_CASE("planarity agrees with the Wagner search and known counts", "[classes][planar]") {
  const std::vector<int> planar_counts{1, 2, 4, 11, 33, 142, 822};
  for (int n = 1; n <= 7; ++n) {
    int count = 0;
    for (const graph& g : all_graphs(n, {false, true})) {
      const bool planar = is_planar(g);
      if (n <= 6) REQUIRE(planar == is_planar_wagner(g));
      count += planar;
    }
    CHECK(count == planar_counts[n - 1]);
  }
  CHECK_FALSE(is_planar(complete(5)));
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)));
  CHECK(is_planar(elementary_wall(4, 4)));
}

TEST_CASE("complete bipartite recognition", "[classes]") {
  for (const graph& g : iso_graphs(6)) REQUIRE(is_complete_bipartite(g) == complete_bipartite_oracle(g));
  CHECK(is_complete_bipartite(edgeless(3)));
  CHECK_FALSE(is_complete_bipartite(path(4)));
}

TEST_CASE("K1,q induced-minor freeness matches the closure", "[classes][k1q]") {
  oracle::closure closure(oracle::step_set::induced_minor);
  for (const graph& g : iso_graphs(6))
    for (int q = 2; q <= 4; ++q) {
      const auto r = k1q_induced_minor_free(g, q);
      REQUIRE(r.free == !closure.contains(star(q), g));
      if (!r.free) {
        const auto& w = *r.witness;
        REQUIRE(w.independent.size() == q);
        REQUIRE(is_independent(g, w.independent));
        REQUIRE(induces_connected(g, w.component));
        REQUIRE_FALSE(w.component.intersects(w.independent));
        REQUIRE(w.independent.is_subset_of(g.neighbors_of(w.component)));
      }
    }
}

TEST_CASE("binding functions", "[classes][binding]") {
  const auto cactus = parse_binding("block_cactus");
  CHECK(cactus(1) == 2);
  CHECK(cactus(3) == 2);
  CHECK(cactus(5) == 4);
  CHECK(parse_binding("chordal")(4) == 3);
  CHECK(parse_binding("linear:-1")(1) == 0);
  CHECK(binding_function::ramsey(3)(2) == 4);
  CHECK(binding_function::skodinis(3)(2) == 9);
  CHECK(binding_function::skodinis(3)(1) == 3);
  CHECK(binding_function::fixed(5)(100) == 5);
  CHECK(binding_function::hadwiger_max_of(4)(3) == 4);
  CHECK(binding_function::hadwiger_max_of(4)(7) == 7);
  CHECK(cactus.ceiling(3) == 2);
  CHECK(binding_function::linear(-1).ceiling(0) == 0);
  CHECK_THROWS(binding_function::unknown_constant()(1));
  CHECK_THROWS(cactus(0));
  CHECK_THROWS(parse_binding("nope"));
}

TEST_CASE("dichotomy verdicts on the standard patterns", "[classes][dichotomy]") {
  CHECK(dichotomy(path(3), relation::induced_subgraph).bounded);
  CHECK_FALSE(dichotomy(star(3), relation::induced_subgraph).bounded);
  CHECK(dichotomy(star(3), relation::subgraph).bounded);
  CHECK(dichotomy(cycle(4), relation::induced_topological_minor).bounded);
  CHECK(dichotomy(complete_minus_edge(4), relation::induced_topological_minor).bounded);
  CHECK_FALSE(dichotomy(complete(4), relation::induced_topological_minor).bounded);
  CHECK(dichotomy(complete_bipartite(2, 3), relation::induced_minor).bounded);
  CHECK(dichotomy(wheel4(), relation::induced_minor).bounded);
  CHECK_FALSE(dichotomy(complete(5), relation::minor).bounded);
  CHECK_FALSE(dichotomy(complete_bipartite(3, 3), relation::induced_minor).bounded);
  CHECK(dichotomy(edgeless(4), relation::induced_subgraph).bounded);

  const auto k4m = dichotomy(complete_minus_edge(4), relation::induced_topological_minor);
  REQUIRE(k4m.binding);
  CHECK((*k4m.binding)(1) == 2);
  const auto k23 = dichotomy(complete_bipartite(2, 3), relation::induced_minor);
  REQUIRE(k23.binding);
  CHECK((*k23.binding)(2) == 9);
  CHECK_THROWS_AS(dichotomy(path(11), relation::minor), argument_error);
}

TEST_CASE("line graph roots in S", "[classes][dichotomy]") {
  CHECK(line_graph_root_in_S(complete(3)));
  CHECK(line_graph_root_in_S(path(4)));
  CHECK(line_graph_root_in_S(edgeless(2)));
  CHECK_FALSE(line_graph_root_in_S(star(3)));
  CHECK_FALSE(line_graph_root_in_S(cycle(4)));
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= a; ++b)
      for (int c = 1; c <= b; ++c) {
        const auto root = line_graph_root_in_S(line_graph(subdivided_claw(a, b, c)));
        REQUIRE(root);
        REQUIRE(oracle::isomorphic(line_graph(*root), line_graph(subdivided_claw(a, b, c))));
      }
}

TEST_CASE("finite set dichotomy", "[classes][dichotomy]") {
  const auto bounded = finite_set_induced_subgraph_dichotomy({complete_bipartite(2, 2), star(3), complete(3)});
  CHECK(bounded.bounded);
  CHECK(bounded.complete_bipartite_member == 0u);
  CHECK(bounded.s_member == 1u);
  CHECK(bounded.line_graph_member == 2u);

  // A star is both complete bipartite and in S, but no line graph is present.
  const auto unbounded = finite_set_induced_subgraph_dichotomy({star(3)});
  CHECK_FALSE(unbounded.bounded);
  CHECK_FALSE(unbounded.line_graph_member);
  CHECK_FALSE(unbounded.reason.empty());

  CHECK(finite_set_induced_subgraph_dichotomy({path(3)}).bounded);
}
