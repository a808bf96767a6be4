#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twomega/binding.hpp"
#include "twomega/budget.hpp"
#include "twomega/containment.hpp"
#include "twomega/graph.hpp"

namespace twomega {

struct chordal_result {
  bool chordal = false;
  /// Perfect elimination ordering when chordal.
  std::vector<vertex> elimination_order;
  /// Vertices of an induced cycle of length >= 4, in cyclic order, otherwise.
  std::vector<vertex> hole;
};

/// Maximum cardinality search followed by a perfect elimination test.
chordal_result is_chordal(const graph& g);

struct block_cactus_result {
  bool block_cactus = false;
  /// A block that is neither a cycle nor complete, when one exists.
  std::optional<vertex_set> offending_block;
};

block_cactus_result is_block_cactus(const graph& g);

/// Every component is a path (possibly a single vertex) or a subdivided claw.
bool in_class_S(const graph& h);
bool is_subcubic(const graph& g);
bool is_edgeless(const graph& g);

/// Boyer-Myrvold planarity test.
bool is_planar(const graph& g);
/// Planarity via Euler's bound followed by K5 and K3,3 minor searches.
/// Slow; kept as an independent check of is_planar. Throws budget_exceeded.
bool is_planar_wagner(const graph& g, std::uint64_t node_limit = default_node_limit());

/// K_p,q for some p, q >= 0. Edgeless graphs count as K_0,n.
bool is_complete_bipartite(const graph& g);

/// Independent set S and a component C of G - S with every vertex of S
/// adjacent to C: the K_1,q induced minor certificate.
struct k1q_witness {
  vertex_set independent;
  vertex_set component;
};

struct k1q_result {
  bool free = true;
  std::optional<k1q_witness> witness;
};

/// Throws budget_exceeded when the enumeration of q-sets runs out of budget.
k1q_result k1q_induced_minor_free(const graph& g, int q, std::uint64_t node_limit = default_node_limit());

struct dichotomy_verdict {
  relation rel = relation::subgraph;
  graph pattern;
  bool bounded = false;
  std::optional<binding_function> binding;
  std::string reason;
};

/// Largest pattern the dichotomy accepts.
inline constexpr int max_dichotomy_pattern = 10;

/// Whether excluding h under rel gives a (tw, omega)-bounded class, with the
/// binding function where one is known. Throws argument_error for patterns
/// larger than max_dichotomy_pattern.
dichotomy_verdict dichotomy(const graph& h, relation rel);

/// Some member of S whose line graph is isomorphic to h.
std::optional<graph> line_graph_root_in_S(const graph& h);

struct finite_set_verdict {
  bool bounded = false;
  /// Indices into the input list of the first member of each kind.
  std::optional<std::size_t> complete_bipartite_member;
  std::optional<std::size_t> s_member;
  std::optional<std::size_t> line_graph_member;
  std::string reason;
};

/// Excluding a finite set of induced subgraphs: bounded exactly when the set
/// has a complete bipartite member, a member of S, and a line graph of a
/// member of S.
finite_set_verdict finite_set_induced_subgraph_dichotomy(const std::vector<graph>& hs);

}  // namespace twomega
