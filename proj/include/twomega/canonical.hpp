#pragma once

#include <cstdint>
#include <vector>

#include "twomega/graph.hpp"

namespace twomega {

/// Relabels g so that vertex v becomes perm[v].
graph relabel(const graph& g, const std::vector<vertex>& perm);

/// Canonical labeling by individualization-refinement: colour refinement to
/// an equitable ordered partition, branching on the first non-singleton cell
/// (one representative per twin class), keeping the labeling whose packed
/// adjacency code is smallest. perm[v] is the canonical label of v.
std::vector<vertex> canonical_labeling(const graph& g);
graph canonical_form(const graph& g);
bool isomorphic(const graph& a, const graph& b);

/// Upper triangle in column order packed into one word; n <= 11.
std::uint64_t pack_small(const graph& g);
graph unpack_small(std::uint64_t code, int n);

}  // namespace twomega
