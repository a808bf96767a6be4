#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "twomega/budget.hpp"
#include "twomega/graph.hpp"

namespace twomega {

enum class relation { subgraph, induced_subgraph, topological_minor, induced_topological_minor, minor, induced_minor };

inline constexpr std::array<relation, 6> all_relations{
    relation::subgraph,          relation::induced_subgraph, relation::topological_minor,
    relation::induced_topological_minor, relation::minor,    relation::induced_minor};

std::string_view to_string(relation r);
/// Accepts the names printed by to_string; throws argument_error otherwise.
relation parse_relation(std::string_view name);
bool is_induced(relation r);

/// Bags indexed by pattern vertex.
struct minor_model {
  graph pattern;
  std::vector<vertex_set> bags;
  bool induced = false;
};

/// Branch vertices indexed by pattern vertex; one path per pattern edge in
/// lexicographic edge order, each running from the image of the smaller
/// endpoint to the image of the larger one.
struct subdivision_model {
  graph pattern;
  std::vector<vertex> branch;
  std::vector<std::vector<vertex>> paths;
  bool induced = false;
};

/// Empty string when valid, otherwise a description of the broken rule.
std::string check_embedding(const graph& h, const graph& g, const std::vector<vertex>& map, bool induced);
std::string check_minor_model(const graph& g, const minor_model& m);
std::string check_subdivision(const graph& g, const subdivision_model& s);

// Exact searches. They throw budget_exceeded when the node limit is hit.
std::optional<std::vector<vertex>> find_subgraph(const graph& h, const graph& g, bool induced,
                                                 std::uint64_t node_limit = default_node_limit());
std::optional<minor_model> find_minor_model(const graph& h, const graph& g, bool induced,
                                            std::uint64_t node_limit = default_node_limit());
inline std::optional<minor_model> find_induced_minor_model(const graph& h, const graph& g,
                                                           std::uint64_t node_limit = default_node_limit()) {
  return find_minor_model(h, g, true, node_limit);
}
std::optional<subdivision_model> find_subdivision(const graph& h, const graph& g, bool induced,
                                                  std::uint64_t node_limit = default_node_limit());

enum class outcome { absent, found, refused };
std::string_view to_string(outcome o);

struct containment_result {
  outcome result = outcome::absent;
  std::optional<std::vector<vertex>> embedding;  // subgraph relations
  std::optional<subdivision_model> subdivision;  // topological relations
  std::optional<minor_model> model;              // minor relations
  std::string refusal;

  bool found() const { return result == outcome::found; }
};

/// Three-valued containment test. Budget exhaustion becomes `refused`;
/// every positive answer carries a witness that has been revalidated.
containment_result contains(const graph& h, const graph& g, relation rel,
                            std::uint64_t node_limit = default_node_limit());
containment_result contains_topological(const graph& h, const graph& g, bool induced,
                                        std::uint64_t node_limit = default_node_limit());

/// Answers for all six relations and any broken implication between them
/// (subgraph => topological minor => minor, the induced chain, and each
/// induced relation => its plain counterpart).
struct implication_report {
  std::array<outcome, 6> results{};
  std::vector<std::string> violations;

  outcome at(relation r) const { return results[static_cast<int>(r)]; }
  bool consistent() const { return violations.empty(); }
};

implication_report relation_implication_check(const graph& h, const graph& g,
                                              std::uint64_t node_limit = default_node_limit());

}  // namespace twomega
