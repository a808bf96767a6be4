#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "twomega/graph.hpp"

namespace twomega {

graph complete(int n);
graph complete_bipartite(int p, int q);
/// Vertices 0..n-1 in cycle order; n >= 3.
graph cycle(int n);
/// Path on n vertices 0-1-...-(n-1).
graph path(int n);
/// K_{1,q} with the center at index 0.
graph star(int q);
graph edgeless(int n);
/// K_q minus the edge {q-2, q-1}; q >= 2.
graph complete_minus_edge(int q);
/// K_{2,q} plus an edge between the two vertices of the size-2 side.
graph k2q_plus(int q);
/// C_4 on 0..3 plus the hub 4.
graph wheel4();
/// Center 0, then the legs of a, b and c edges, each numbered outward.
graph subdivided_claw(int a, int b, int c);

struct wall_spec {
  int rows = 1;
  int columns = 1;
  int subdivisions = 0;
};

/// Brick wall with rows x columns hexagonal bricks. See docs/walls.md for
/// the lattice layout and vertex numbering.
graph elementary_wall(int rows, int columns);
/// Each wall edge replaced by a path with q internal vertices. The wall's
/// own vertices keep their indices; subdivision vertices follow, edge by
/// edge in lexicographic order, from the smaller endpoint outward.
graph q_subdivided_wall(const wall_spec& spec);

/// Portable random source: raw 64-bit outputs of std::mt19937_64 with our
/// own range reduction, so sequences do not depend on the standard library's
/// distribution implementations.
class rng {
 public:
  explicit rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi] by rejection sampling.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  /// True with probability p, using the top 53 bits as a double in [0, 1).
  bool bernoulli(double p);

 private:
  std::mt19937_64 engine_;
};

/// G(n, p).
graph random_graph(int n, double p, std::uint64_t seed);
/// Chordal by construction: each new vertex attaches to a nonempty subset of
/// a maximal clique of the current graph, keeping cliques below max_clique + 1.
graph random_chordal(int n, int max_clique, std::uint64_t seed);
/// Block-cactus by construction: blocks are K_s or C_s (2 <= s <= max_block)
/// glued one at a time at a random existing vertex.
graph random_block_cactus(int blocks, int max_block, std::uint64_t seed);

struct enumeration_options {
  bool connected_only = false;
  bool up_to_isomorphism = false;
};

/// Largest order accepted by enumerate_all_graphs in labeled mode.
inline constexpr int max_labeled_enumeration = 8;
/// Largest order accepted in isomorphism-reduced mode.
inline constexpr int max_iso_enumeration = 10;

/// Streams every graph on n vertices to visit, in a deterministic order.
/// Labeled mode visits all 2^(n(n-1)/2) graphs by increasing edge bitmask
/// (bit i = i-th pair in column order). Isomorphism-reduced mode visits one
/// representative per class, in canonical form. Returns the count visited.
std::uint64_t enumerate_all_graphs(int n, const enumeration_options& opts,
                                   const std::function<void(const graph&)>& visit);

/// Convenience for small n: collects the stream.
std::vector<graph> all_graphs(int n, const enumeration_options& opts);

}  // namespace twomega
