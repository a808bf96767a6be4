#include <catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"
#include "twomega/containment.hpp"
#include "twomega/errors.hpp"
#include "twomega/generators.hpp"

using namespace twomega;

namespace {

std::vector<graph> iso_graphs(int min_n, int max_n) {
  std::vector<graph> out;
  for (int n = min_n; n <= max_n; ++n)
    for (graph& g : all_graphs(n, {false, true})) out.push_back(std::move(g));
  return out;
}

oracle::step_set steps_for(relation r) {
  switch (r) {
    case relation::subgraph: return oracle::step_set::subgraph;
    case relation::induced_subgraph: return oracle::step_set::induced_subgraph;
    case relation::topological_minor: return oracle::step_set::topological;
    case relation::induced_topological_minor: return oracle::step_set::induced_topological;
    case relation::minor: return oracle::step_set::minor;
    case relation::induced_minor: return oracle::step_set::induced_minor;
  }
  return oracle::step_set::subgraph;
}

void check_witness(const graph& h, const graph& g, relation rel, const containment_result& r) {
  switch (rel) {
    case relation::subgraph:
    case relation::induced_subgraph:
      REQUIRE(r.embedding);
      REQUIRE(check_embedding(h, g, *r.embedding, is_induced(rel)).empty());
      break;
    case relation::topological_minor:
    case relation::induced_topological_minor:
      REQUIRE(r.subdivision);
      REQUIRE(check_subdivision(g, *r.subdivision).empty());
      REQUIRE(r.subdivision->induced == is_induced(rel));
      break;
    case relation::minor:
    case relation::induced_minor:
      REQUIRE(r.model);
      REQUIRE(check_minor_model(g, *r.model).empty());
      REQUIRE(r.model->induced == is_induced(rel));
      break;
  }
}

}  // namespace

TEST_CASE("relation names round trip", "[containment]") {
  for (relation r : all_relations) CHECK(parse_relation(to_string(r)) == r);
  CHECK_THROWS_AS(parse_relation("nonsense"), argument_error);
}

TEST_CASE("all six relations agree with the reduction closures", "[containment][oracle]") {
  const auto patterns = iso_graphs(1, 5);
  const auto hosts = iso_graphs(1, 6);
  for (relation rel : all_relations) {
    oracle::closure closure(steps_for(rel));
    std::size_t positives = 0;
    for (const graph& g : hosts)
      for (const graph& h : patterns) {
        if (h.order() > g.order()) continue;
        const auto r = contains(h, g, rel);
        const bool expected = closure.contains(h, g);
        INFO(to_string(rel) << " pattern " << h.order() << "/" << h.size() << " host " << g.order() << "/" << g.size());
        REQUIRE(r.result != outcome::refused);
        REQUIRE(r.found() == expected);
        if (expected) {
          check_witness(h, g, rel, r);
          ++positives;
        }
      }
    INFO(to_string(rel));
    CHECK(positives > 0);
  }
}

TEST_CASE("implications between relations hold on random pairs", "[containment]") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const graph h = random_graph(4, 0.5, seed);
    const graph g = random_graph(8, 0.4, seed + 1000);
    const auto report = relation_implication_check(h, g);
    INFO(report.violations.size());
    REQUIRE(report.consistent());
  }
}

TEST_CASE("witness checkers reject broken witnesses", "[containment]") {
  const graph c4 = cycle(4);
  CHECK(check_embedding(path(3), c4, {0, 1, 2}, true).empty());
  CHECK_FALSE(check_embedding(path(3), complete(3), {0, 1, 2}, true).empty());
  CHECK_FALSE(check_embedding(path(3), c4, {0, 1, 1}, false).empty());

  minor_model good{complete(3), {{0, 1}, {2}, {3}}, false};
  CHECK(check_minor_model(c4, good).empty());
  minor_model disconnected_bag{complete(3), {{0, 2}, {1}, {3}}, false};
  CHECK_FALSE(check_minor_model(c4, disconnected_bag).empty());
  minor_model overlapping{path(2), {{0, 1}, {1, 2}}, false};
  CHECK_FALSE(check_minor_model(c4, overlapping).empty());
  minor_model not_induced{path(3), {{0}, {1}, {2, 3}}, true};
  CHECK_FALSE(check_minor_model(c4, not_induced).empty());

  subdivision_model sub{complete(3), {0, 1, 2}, {{0, 1}, {0, 3, 2}, {1, 2}}, false};
  CHECK(check_subdivision(c4, sub).empty());
  subdivision_model shortcut{complete(3), {0, 1, 2}, {{0, 1}, {0, 2}, {1, 2}}, false};
  CHECK_FALSE(check_subdivision(c4, shortcut).empty());
}

TEST_CASE("known containments", "[containment]") {
  CHECK(contains(cycle(4), complete_bipartite(2, 3), relation::induced_subgraph).found());
  CHECK_FALSE(contains(cycle(4), complete(5), relation::induced_minor).found());
  CHECK(contains(complete(4), elementary_wall(1, 2), relation::minor).result == outcome::absent);
  CHECK(contains(complete(3), elementary_wall(1, 2), relation::minor).found());
  CHECK(contains(star(3), elementary_wall(2, 2), relation::induced_topological_minor).found());
  CHECK_FALSE(contains(star(4), elementary_wall(2, 2), relation::topological_minor).found());
  CHECK(contains(complete_bipartite(2, 3), complete_bipartite(3, 3), relation::induced_minor).found());
  CHECK(contains(complete(5), complete(6), relation::subgraph).found());
}

TEST_CASE("budget exhaustion is a refusal, not an answer", "[containment]") {
  const auto r = contains(complete(6), random_graph(30, 0.5, 4), relation::induced_minor, 10);
  CHECK(r.result == outcome::refused);
  CHECK_FALSE(r.refusal.empty());
  CHECK_THROWS_AS(find_minor_model(complete(6), random_graph(30, 0.5, 4), true, 10), budget_exceeded);
}
