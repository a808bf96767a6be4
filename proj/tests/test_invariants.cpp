#include <catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"
#include "twomega/errors.hpp"
#include "twomega/generators.hpp"
#include "twomega/invariants.hpp"
#include "twomega/tree_decomposition.hpp"

using namespace twomega;

namespace {

std::vector<graph> small_graphs(int max_n) {
  std::vector<graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (graph& g : all_graphs(n, {false, true})) out.push_back(std::move(g));
  return out;
}

std::vector<graph> random_graphs(int n, int count, std::uint64_t seed) {
  std::vector<graph> out;
  for (int i = 0; i < count; ++i) out.push_back(random_graph(n, 0.15 + 0.7 * (i % 10) / 10.0, seed + i));
  return out;
}

}  // namespace

TEST_CASE("clique and independence numbers match subset enumeration", "[invariants]") {
  auto graphs = small_graphs(6);
  for (graph& g : random_graphs(12, 100, 1)) graphs.push_back(std::move(g));
  for (const graph& g : graphs) {
    const auto omega = clique_number(g);
    const auto alpha = independence_number(g);
    REQUIRE(omega.value == oracle::clique_number(g));
    REQUIRE(alpha.value == oracle::independence_number(g));
    REQUIRE(omega.witness.size() == omega.value);
    REQUIRE(is_clique(g, omega.witness));
    REQUIRE(is_independent(g, alpha.witness));
  }
}

TEST_CASE("find_clique returns cliques of the requested size", "[invariants]") {
  for (const graph& g : random_graphs(10, 50, 7)) {
    const int omega = oracle::clique_number(g);
    const auto hit = find_clique(g, omega);
    REQUIRE(hit);
    REQUIRE(hit->size() == omega);
    REQUIRE(is_clique(g, *hit));
    REQUIRE_FALSE(find_clique(g, omega + 1));
  }
}

TEST_CASE("chromatic number matches exhaustive colouring", "[invariants]") {
  auto graphs = small_graphs(6);
  for (graph& g : random_graphs(8, 40, 3)) graphs.push_back(std::move(g));
  for (const graph& g : graphs) {
    const auto chi = chromatic_number(g);
    REQUIRE(chi.value == oracle::chromatic_number(g));
    for (auto [u, v] : g.edges()) REQUIRE(chi.colors[u] != chi.colors[v]);
  }
}

TEST_CASE("exact treewidth matches the elimination-order oracle", "[invariants][treewidth]") {
  auto graphs = small_graphs(6);
  for (graph& g : random_graphs(8, 60, 11)) graphs.push_back(std::move(g));
  for (const graph& g : graphs) {
    const auto tw = treewidth_exact(g);
    INFO(g.order() << " vertices, " << g.size() << " edges");
    REQUIRE(tw.value == oracle::treewidth(g));
    REQUIRE(validate_tree_decomposition(g, tw.decomposition));
    REQUIRE(tw.decomposition.width() == tw.value);
    REQUIRE(elimination_width(g, tw.elimination_order) == tw.value);

    const auto bounds = treewidth_bounds(g);
    REQUIRE(bounds.lower <= tw.value);
    REQUIRE(tw.value <= bounds.upper);
    REQUIRE(elimination_width(g, bounds.upper_order) == bounds.upper);

    REQUIRE(treewidth_at_most(g, tw.value));
    if (tw.value > 0) REQUIRE_FALSE(treewidth_at_most(g, tw.value - 1));
  }
}

TEST_CASE("treewidth of standard families", "[invariants][treewidth]") {
  CHECK(treewidth_exact(graph(0)).value == -1);
  CHECK(treewidth_exact(edgeless(4)).value == 0);
  CHECK(treewidth_exact(path(10)).value == 1);
  CHECK(treewidth_exact(cycle(12)).value == 2);
  CHECK(treewidth_exact(complete(9)).value == 8);
  for (int n = 2; n <= 5; ++n) CHECK(treewidth_exact(complete_bipartite(n, n)).value == n);
  CHECK(treewidth_exact(complete_bipartite(3, 7)).value == 3);
}

TEST_CASE("treewidth refuses instead of guessing when the budget runs out", "[invariants][treewidth]") {
  CHECK_THROWS_AS(treewidth_exact(random_graph(40, 0.5, 1), 50), budget_exceeded);
}

TEST_CASE("degeneracy", "[invariants]") {
  CHECK(degeneracy(complete(5)) == 4);
  CHECK(degeneracy(cycle(7)) == 2);
  CHECK(degeneracy(star(6)) == 1);
  CHECK(degeneracy(complete_bipartite(3, 5)) == 3);
}

TEST_CASE("Hadwiger number matches the minor closure", "[invariants][hadwiger]") {
  oracle::closure minors(oracle::step_set::minor);
  for (const graph& g : small_graphs(6)) {
    const auto& closed = minors.of(g);
    int eta = 0;
    while (eta < g.order() && closed.count(oracle::canonical_code(complete(eta + 1)))) ++eta;
    REQUIRE(hadwiger_number(g) == eta);
  }
  CHECK(hadwiger_number(complete_bipartite(3, 3)) == 4);
  CHECK(hadwiger_number(cycle(9)) == 3);
  CHECK(hadwiger_number(elementary_wall(1, 3)) == 3);
}

TEST_CASE("minimal separators match the full-component oracle", "[invariants][separators]") {
  auto graphs = small_graphs(6);
  for (graph& g : random_graphs(9, 40, 5)) graphs.push_back(std::move(g));
  for (const graph& g : graphs) {
    const auto reports = minimal_separators(g);
    std::set<std::uint32_t> got;
    for (const auto& r : reports) {
      std::uint32_t mask = 0;
      for (vertex v : r.separator.to_vector()) mask |= 1u << v;
      got.insert(mask);
      REQUIRE(r.full_components.size() >= 2);
      for (const auto& c : r.full_components) REQUIRE(g.neighbors_of(c) == r.separator);
      REQUIRE(full_components(g, r.separator).size() == r.full_components.size());
    }
    REQUIRE(got == oracle::minimal_separators(g));
    REQUIRE(got.size() == reports.size());
  }
}

TEST_CASE("Ramsey upper bounds", "[invariants]") {
  CHECK(ramsey_upper(1, 5) == 1);
  CHECK(ramsey_upper(3, 3) == 6);
  CHECK(ramsey_upper(4, 4) == 20);
  CHECK(ramsey_upper(3, 4) == 10);
  CHECK_THROWS_AS(ramsey_upper(0, 2), argument_error);
  CHECK_THROWS_AS(ramsey_upper(200, 200), argument_error);
}
