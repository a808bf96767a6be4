#pragma once

#include <string>
#include <vector>

#include "twomega/graph.hpp"

namespace twomega {

/// Tree over nodes 0..bags.size()-1, each node carrying a bag of host vertices.
struct tree_decomposition {
  std::vector<vertex_set> bags;
  std::vector<edge> tree_edges;

  int node_count() const { return static_cast<int>(bags.size()); }
  /// max |bag| - 1; -1 for a decomposition with only empty bags.
  int width() const;
};

struct td_check {
  enum class axiom { ok, not_a_tree, bag_out_of_range, vertex_uncovered, edge_uncovered, subtree_disconnected };
  axiom failed = axiom::ok;
  std::string message;
  /// The offending host vertex or edge endpoints, when applicable.
  std::vector<vertex> witness;

  explicit operator bool() const { return failed == axiom::ok; }
};

/// Checks the tree shape and the three decomposition axioms; reports the
/// first failure found (tree shape, then vertices, edges, connectivity).
td_check validate_tree_decomposition(const graph& g, const tree_decomposition& td);

/// Decomposition induced by eliminating vertices in the given order: the bag
/// of v is v plus its later neighbours in the filled graph.
tree_decomposition decomposition_from_order(const graph& g, const std::vector<vertex>& order);

/// Width of the elimination order (max later-degree in the filled graph).
int elimination_width(const graph& g, const std::vector<vertex>& order);

}  // namespace twomega
