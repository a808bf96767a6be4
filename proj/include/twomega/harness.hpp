#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twomega/binding.hpp"
#include "twomega/budget.hpp"
#include "twomega/containment.hpp"
#include "twomega/graph.hpp"

namespace twomega {

enum class row_status { pass, violation, refused };
std::string to_string(row_status s);

/// One checked instance. A violation row always carries the graph6 of the
/// instance so it can be replayed on its own.
struct instance_row {
  std::size_t index = 0;
  std::string graph6;
  row_status status = row_status::pass;
  std::string detail;
  /// Measured values (omega, tw, eta, membership flags, check outcomes).
  nlohmann::json values = nlohmann::json::object();
};

struct experiment_report {
  std::string name;
  std::vector<instance_row> rows;
  std::size_t violations = 0;
  std::size_t refusals = 0;
  /// Largest treewidth seen for each clique number, when recorded.
  std::map<int, int> max_tw_per_omega;
  /// Suite-specific totals (class sizes, counts per branch, ...).
  nlohmann::json summary = nlohmann::json::object();

  bool passed(bool allow_refusals = true) const { return violations == 0 && (allow_refusals || refusals == 0); }
  /// Recomputes the tallies from the rows.
  void tally();
  nlohmann::json summary_json() const;
};

/// One JSON object per row.
void write_jsonl(std::ostream& out, const experiment_report& report);
/// Header plus one line per report.
void write_csv_summary(std::ostream& out, const std::vector<experiment_report>& reports);

struct harness_options {
  std::uint64_t seed = 1;
  int jobs = 1;
  std::uint64_t node_limit = default_node_limit();
};

/// Runs body(i) for i in [0, count) on `jobs` threads. Exceptions from body
/// are rethrown on the calling thread after all workers stop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

/// Class of graphs for a binding experiment: a named class or the graphs
/// excluding a pattern under a relation.
struct class_descriptor {
  std::string named;  // "block_cactus", "chordal", "p3_free", "edgeless_free:<t>", "k2q_im_free:<q>"
  std::optional<relation> rel;
  std::optional<graph> pattern;
};

struct generator_plan {
  /// "random_graph", "random_chordal", "random_block_cactus",
  /// "clique_union", "exhaustive".
  std::string family = "random_graph";
  int min_n = 1;
  int max_n = 10;
  std::size_t count = 100;
  double p = 0.5;  // random_graph edge probability; ignored when randomize_p
  bool randomize_p = true;
  std::uint64_t seed = 1;
};

struct experiment_spec {
  std::string name;
  class_descriptor cls;
  std::vector<generator_plan> plans;
  /// "binding" checks tw <= f(omega); "hereditary" also checks sampled
  /// induced subgraphs; "equality" checks tw == omega - 1.
  std::vector<std::string> checks{"binding"};
  std::uint64_t node_limit = default_node_limit();
  /// Candidates drawn per requested member before giving up.
  std::size_t max_attempts_factor = 200;
};

/// Parses the JSON form described in docs/experiment_spec.md. Throws
/// argument_error on unknown fields or bad values.
experiment_spec parse_experiment_spec(const nlohmann::json& j);

/// Membership in the descriptor's class; nullopt on refusal.
std::optional<bool> class_member(const class_descriptor& cls, const graph& g, std::uint64_t node_limit);
/// The binding function of the descriptor's class. Throws argument_error
/// when the class has no explicit binding.
binding_function class_binding(const class_descriptor& cls);

experiment_report verify_binding(const experiment_spec& spec, const harness_options& opts = {});

enum class unbounded_family { balanced_bipartite, wall, subdivided_wall, line_of_subdivided_wall };
experiment_report verify_unboundedness(unbounded_family family, const std::vector<int>& sizes, int q = 1,
                                       const harness_options& opts = {});

/// Exhaustive equivalence checks up to n_max: chordality, block-cactus and
/// the two Hadwiger bounds.
std::vector<experiment_report> verify_equivalences(int n_max, const harness_options& opts = {});
experiment_report verify_chordal_equivalence(int n_max, const harness_options& opts = {});
experiment_report verify_block_cactus_equivalence(int n_max, const harness_options& opts = {});
experiment_report verify_hadwiger_bounds(int n_max, const harness_options& opts = {});

experiment_report verify_separator_bound(int q, int n_max, const harness_options& opts = {});

// Suites that mirror the acceptance criteria one to one.
experiment_report suite_chordal_equality(const harness_options& opts = {});
std::vector<experiment_report> suite_binding(const harness_options& opts = {});
std::vector<experiment_report> suite_unboundedness(const harness_options& opts = {});
experiment_report suite_mwis(const harness_options& opts = {});
experiment_report suite_robust_coloring(const harness_options& opts = {});
experiment_report suite_clique_approximation(const harness_options& opts = {});
/// One report per relation over the fixed pattern set, against frozen
/// hand-derived verdicts.
std::vector<experiment_report> suite_dichotomy_table(const harness_options& opts = {});

/// Names accepted by run_suite, in acceptance order, plus "table1" and "all".
const std::vector<std::string>& suite_names();
std::vector<experiment_report> run_suite(const std::string& name, const harness_options& opts = {});

}  // namespace twomega
