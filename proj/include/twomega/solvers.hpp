#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twomega/binding.hpp"
#include "twomega/budget.hpp"
#include "twomega/classes.hpp"
#include "twomega/graph.hpp"
#include "twomega/tree_decomposition.hpp"

namespace twomega {

struct mwis_result {
  std::int64_t weight = 0;
  vertex_set set;
};

/// The input is not K_1,q-induced-minor-free. Carries the (S, C) certificate.
class k1q_precondition_error : public argument_error {
 public:
  k1q_precondition_error(const std::string& msg, k1q_witness w) : argument_error(msg), witness_(std::move(w)) {}
  const k1q_witness& witness() const { return witness_; }

 private:
  k1q_witness witness_;
};

struct mwis_k1q_options {
  /// Run the full K_1,q induced-minor test first on graphs up to this order.
  int check_class_up_to = 20;
  std::uint64_t node_limit = default_node_limit();
};

/// BFS levels N_0..N_l of one component, rooted at its minimum vertex.
struct mwis_levels {
  vertex root = -1;
  std::vector<vertex_set> levels;
  /// Number of independent subsets kept per level (the DP table sizes).
  std::vector<std::size_t> table_sizes;
};

struct mwis_k1q_result : mwis_result {
  std::vector<mwis_levels> components;
};

/// Level dynamic program for K_1,q-induced-minor-free graphs (q >= 2). Level
/// tables hold independent subsets of size at most q - 1, which is exact
/// whenever no BFS level contains q independent vertices. A level that does
/// is itself a K_1,q certificate, so the result is exact or an error is
/// thrown, never a wrong value. Ties prefer the lexicographically smallest
/// predecessor subset.
mwis_k1q_result mwis_k1q(const weighted_graph& wg, int q, const mwis_k1q_options& opts = {});

/// Enumeration over independent sets with a weight bound, n <= 22. Ties go
/// to the lexicographically smallest set. Throws budget_exceeded.
mwis_result mwis_brute(const weighted_graph& wg, std::uint64_t node_limit = default_node_limit());

/// Nice tree decomposition: leaves have empty bags, the root has an empty
/// bag, and every other node introduces or forgets one vertex or joins two
/// children with equal bags. Nodes are stored children first; root is last.
struct nice_node {
  enum class kind { leaf, introduce, forget, join };
  kind type = kind::leaf;
  vertex v = -1;
  vertex_set bag;
  std::vector<int> children;
};

struct nice_tree_decomposition {
  std::vector<nice_node> nodes;
  int root() const { return static_cast<int>(nodes.size()) - 1; }
};

/// Throws argument_error if td is not a valid decomposition of g.
nice_tree_decomposition make_nice(const graph& g, const tree_decomposition& td);

/// Colours 1..k; lists[v] is a bitmask with bit c - 1 set when c is allowed.
struct color_lists {
  int k = 0;
  std::vector<std::uint32_t> lists;

  static color_lists full(int n, int k);
  bool allows(vertex v, int color) const { return (lists[v] >> (color - 1) & 1) != 0; }
};

/// Empty string when colors is a proper colouring respecting the lists.
std::string check_list_coloring(const graph& g, const color_lists& lists, const std::vector<int>& colors);

/// Exact list colouring by dynamic programming over a nice decomposition.
std::optional<std::vector<int>> list_coloring_on_td(const graph& g, const color_lists& lists,
                                                    const tree_decomposition& td);
/// Backtracking oracle. Throws budget_exceeded.
std::optional<std::vector<int>> list_coloring_brute(const graph& g, const color_lists& lists,
                                                    std::uint64_t node_limit = default_node_limit());

/// Exact MWIS by dynamic programming over a nice decomposition.
mwis_result mwis_on_td(const weighted_graph& wg, const tree_decomposition& td);

struct robust_outcome {
  enum class kind { colored, not_colorable, not_in_class, refused };
  kind result = kind::refused;
  std::vector<int> coloring;
  /// The (k+1)-clique when that is the reason for not_colorable.
  std::optional<vertex_set> clique;
  /// c_k = max(f(1), ..., f(k)).
  std::int64_t ceiling = 0;
  std::string detail;
};

std::string to_string(robust_outcome::kind k);

/// Either solves List-k-Colouring or reports that g is outside the class
/// bound by `binding`: a (k+1)-clique means not colourable; treewidth above
/// c_k means not in the class; otherwise the decomposition DP decides.
robust_outcome robust_list_k_coloring(const graph& g, const color_lists& lists, int k,
                                      const binding_function& binding,
                                      std::uint64_t node_limit = default_node_limit());

/// Smallest integer m with m^(c+eps) >= t + 1. Since the clique number is an
/// integer at least (t+1)^(1/(c+eps)), m is still a lower bound on it. The
/// exponent is rounded up to a multiple of 1/1000 (which can only lower m)
/// and compared exactly with big integers. Requires t >= 0, c >= 1, eps > 0.
int clique_lower_bound_from_width(int t, double c, double eps);
/// Smallest m >= 1 with base^m >= t + 1, for exponential bindings base^k.
int clique_lower_bound_from_width_log(int t, int base);

struct approx_clique_options {
  enum class formula { polynomial, logarithmic };
  formula shape = formula::polynomial;
  double c = 1.0;
  double eps = 0.5;
  int base = 2;
  std::uint64_t node_limit = default_node_limit();
};

struct approx_clique_result {
  int lower_bound = 0;
  int treewidth = -1;
  /// Exact clique number, for reporting the realized ratio.
  int omega = 0;
  double ratio = 0.0;
  /// omega^(1 - 1/(c+eps)) for the polynomial formula.
  double guarantee = 0.0;
};

/// Lower bound on the clique number from exact treewidth. Throws
/// budget_exceeded when treewidth or the clique number cannot be computed.
approx_clique_result approx_clique(const graph& g, const approx_clique_options& opts = {});

}  // namespace twomega
