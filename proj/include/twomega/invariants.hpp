#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twomega/budget.hpp"
#include "twomega/graph.hpp"
#include "twomega/tree_decomposition.hpp"

namespace twomega {

struct clique_result {
  int value = 0;
  /// Lexicographically smallest optimal set.
  vertex_set witness;
};

/// Branch and bound with a greedy colouring bound.
clique_result clique_number(const graph& g, std::uint64_t node_limit = default_node_limit());
clique_result independence_number(const graph& g, std::uint64_t node_limit = default_node_limit());
/// A clique of exactly `size` vertices inside `within`, if any.
std::optional<vertex_set> find_clique(const graph& g, int size, const vertex_set& within,
                                      std::uint64_t node_limit = default_node_limit());
inline std::optional<vertex_set> find_clique(const graph& g, int size) {
  return find_clique(g, size, g.vertices());
}

struct coloring_result {
  int value = 0;
  /// Colours 0..value-1, lexicographically smallest colour vector.
  std::vector<int> colors;
};

coloring_result chromatic_number(const graph& g, std::uint64_t node_limit = default_node_limit());

struct treewidth_result {
  int value = -1;
  tree_decomposition decomposition;
  std::vector<vertex> elimination_order;
};

/// Exact treewidth with a witness decomposition. tw of the empty graph is -1.
treewidth_result treewidth_exact(const graph& g, std::uint64_t node_limit = default_node_limit());
/// Decision version: an elimination order of width <= k, or nothing.
std::optional<std::vector<vertex>> treewidth_at_most(const graph& g, int k,
                                                     std::uint64_t node_limit = default_node_limit());

struct treewidth_bounds_result {
  int lower = -1;
  int upper = -1;
  std::vector<vertex> upper_order;
};

/// lower = max(degeneracy, minor-min-width); upper = best of greedy
/// min-fill and min-degree elimination.
treewidth_bounds_result treewidth_bounds(const graph& g);
int degeneracy(const graph& g);
int minor_min_width(const graph& g);

/// Largest p with K_p as a minor.
int hadwiger_number(const graph& g, std::uint64_t node_limit = default_node_limit());

struct separator_report {
  vertex_set separator;
  std::vector<vertex_set> full_components;
  /// Minimum vertices of the first two full components.
  edge endpoints{-1, -1};
};

/// All inclusion-minimal u,v-separators, sorted. Each carries its full
/// components (at least two).
std::vector<separator_report> minimal_separators(const graph& g, std::uint64_t node_limit = default_node_limit());
/// Components C of g - s with N(C) = s.
std::vector<vertex_set> full_components(const graph& g, const vertex_set& s);

/// C(k + l - 2, k - 1), an upper bound on the Ramsey number R(k, l).
std::int64_t ramsey_upper(int k, int l);

}  // namespace twomega
