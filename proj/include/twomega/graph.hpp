#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "twomega/errors.hpp"
#include "twomega/vertex_set.hpp"

namespace twomega {

using edge = std::pair<vertex, vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency.
///
/// Invariants: adjacency is symmetric and irreflexive, all indices are in
/// range, and n <= vertex_set::capacity. Mutators keep the invariants and
/// throw argument_error otherwise.
class graph {
 public:
  graph() = default;
  explicit graph(int n);

  static graph from_edges(int n, std::span<const edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const;

  bool adjacent(vertex u, vertex v) const { return adj_[u].contains(v); }
  const vertex_set& neighbors(vertex v) const { return adj_[v]; }
  vertex_set closed_neighbors(vertex v) const {
    vertex_set s = adj_[v];
    s.insert(v);
    return s;
  }
  int degree(vertex v) const { return adj_[v].size(); }
  int max_degree() const;
  vertex_set vertices() const { return vertex_set::range(order()); }
  /// Union of N(v) over v in s, minus s.
  vertex_set neighbors_of(const vertex_set& s) const;

  void add_edge(vertex u, vertex v);
  void remove_edge(vertex u, vertex v);

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<edge> edges() const;

  friend bool operator==(const graph&, const graph&) = default;

 private:
  void check_vertex(vertex v) const;
  std::vector<vertex_set> adj_;
};

/// Graph plus nonnegative integer vertex weights.
struct weighted_graph {
  twomega::graph graph;
  std::vector<std::int64_t> weights;

  weighted_graph() = default;
  weighted_graph(twomega::graph g, std::vector<std::int64_t> w);

  std::int64_t weight_of(const vertex_set& s) const;
};

// Edit operations. All are pure: they return a new graph.

/// Vertices of keep, reindexed densely in ascending original order.
graph induced_subgraph(const graph& g, const vertex_set& keep);
graph delete_vertex(const graph& g, vertex v);
graph delete_edge(const graph& g, vertex u, vertex v);
/// Merges the endpoints of edge uv into the vertex min(u, v); the vertex
/// max(u, v) disappears and higher indices shift down by one.
graph contract_edge(const graph& g, vertex u, vertex v);
/// Replaces uv by the path u-w-v with the new vertex w = n.
graph subdivide_edge(const graph& g, vertex u, vertex v);
/// One vertex per edge of g, in lexicographic edge order.
graph line_graph(const graph& g);
graph complement(const graph& g);
/// Vertices of b follow those of a.
graph disjoint_union(const graph& a, const graph& b);
/// Every vertex of a adjacent to every vertex of b.
graph join(const graph& a, const graph& b);

bool is_connected(const graph& g);
bool is_independent(const graph& g, const vertex_set& s);
bool is_clique(const graph& g, const vertex_set& s);
/// Whether g[s] is connected (the empty set counts as connected).
bool induces_connected(const graph& g, const vertex_set& s);

/// Connected components as sorted vertex sets ordered by minimum element.
std::vector<vertex_set> components(const graph& g);
/// Components of g[within], in the original indexing.
std::vector<vertex_set> components_within(const graph& g, const vertex_set& within);

/// Distance layers N_0 = {v}, N_1, ... from v; g must be connected.
std::vector<vertex_set> bfs_levels(const graph& g, vertex v);

/// Biconnected blocks (an isolated vertex is its own block), each sorted,
/// ordered by their sorted element lists.
std::vector<vertex_set> blocks(const graph& g);

}  // namespace twomega
