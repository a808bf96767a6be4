#pragma once

// Brute-force reference implementations used as test oracles. They share
// nothing with the library beyond the graph container and are meant for
// graphs with at most 7 vertices.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "twomega/graph.hpp"

namespace oracle {

using twomega::graph;
using twomega::vertex;

/// Adjacency matrix as one bit mask per vertex.
struct small {
  int n = 0;
  std::vector<std::uint32_t> adj;

  explicit small(int order = 0) : n(order), adj(order, 0) {}
  explicit small(const graph& g) : small(g.order()) {
    for (auto [u, v] : g.edges()) link(u, v);
  }
  bool has(int u, int v) const { return (adj[u] >> v & 1) != 0; }
  void link(int u, int v) {
    adj[u] |= 1u << v;
    adj[v] |= 1u << u;
  }
  void unlink(int u, int v) {
    adj[u] &= ~(1u << v);
    adj[v] &= ~(1u << u);
  }
  int degree(int v) const { return __builtin_popcount(adj[v]); }

  small without_vertex(int x) const {
    small s(n - 1);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (u != x && v != x && has(u, v)) s.link(u - (u > x), v - (v > x));
    return s;
  }
  /// Merge v into u, then drop v.
  small contracted(int u, int v) const {
    small s = *this;
    for (int w = 0; w < n; ++w)
      if (w != u && w != v && has(v, w)) s.link(u, w);
    return s.without_vertex(v);
  }
  graph to_graph() const {
    graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (has(u, v)) g.add_edge(u, v);
    return g;
  }
};

/// Upper-triangle bit code under a vertex permutation.
inline std::uint64_t code_under(const small& g, const std::vector<int>& perm) {
  std::uint64_t c = 0;
  int bit = 0;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v, ++bit)
      if (g.has(perm[u], perm[v])) c |= std::uint64_t{1} << bit;
  return c;
}

/// Canonical code by trying every permutation (n <= 7). The order is folded
/// into the top bits so graphs of different orders never collide.
inline std::uint64_t canonical_code(const small& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, code_under(g, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best | static_cast<std::uint64_t>(g.n) << 56;
}

inline std::uint64_t canonical_code(const graph& g) { return canonical_code(small(g)); }

inline bool isomorphic(const graph& a, const graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_code(a) == canonical_code(b);
}

/// One-step reductions that generate each containment relation.
enum class step_set { induced_subgraph, subgraph, induced_topological, topological, induced_minor, minor };

inline std::vector<small> reductions(const small& g, step_set steps) {
  std::vector<small> out;
  for (int x = 0; x < g.n; ++x) out.push_back(g.without_vertex(x));
  const bool edges_go = steps == step_set::subgraph || steps == step_set::topological || steps == step_set::minor;
  const bool dissolve = steps == step_set::induced_topological || steps == step_set::topological;
  const bool contract = steps == step_set::induced_minor || steps == step_set::minor;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      if (!g.has(u, v)) continue;
      if (edges_go) {
        small s = g;
        s.unlink(u, v);
        out.push_back(s);
      }
      if (contract) out.push_back(g.contracted(u, v));
    }
  if (dissolve)
    for (int x = 0; x < g.n; ++x) {
      if (g.degree(x) != 2) continue;
      const int a = __builtin_ctz(g.adj[x]);
      const int b = 31 - __builtin_clz(g.adj[x]);
      if (g.has(a, b)) continue;  // would create a parallel edge
      small s = g;
      s.link(a, b);
      out.push_back(s.without_vertex(x));
    }
  return out;
}

/// Canonical codes of every graph reachable from g by the given steps,
/// memoized across calls.
class closure {
 public:
  explicit closure(step_set steps) : steps_(steps) {}

  const std::set<std::uint64_t>& of(const graph& g) { return of(small(g)); }

  bool contains(const graph& h, const graph& g) { return of(g).count(canonical_code(h)) > 0; }

 private:
  const std::set<std::uint64_t>& of(const small& g) {
    const std::uint64_t key = canonical_code(g);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<std::uint64_t> all{key};
    for (const small& child : reductions(g, steps_)) {
      const auto& sub = of(child);
      all.insert(sub.begin(), sub.end());
    }
    return memo_.emplace(key, std::move(all)).first->second;
  }

  step_set steps_;
  std::map<std::uint64_t, std::set<std::uint64_t>> memo_;
};

/// Largest clique by subset enumeration.
inline int clique_number(const graph& g) {
  const small s(g);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s.n); ++mask) {
    bool ok = true;
    for (int v = 0; v < s.n && ok; ++v)
      if (mask >> v & 1) ok = (s.adj[v] | 1u << v | ~mask) == ~0u;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

inline int independence_number(const graph& g) {
  const small s(g);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s.n); ++mask) {
    bool ok = true;
    for (int v = 0; v < s.n && ok; ++v)
      if (mask >> v & 1) ok = (s.adj[v] & mask) == 0;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

/// Smallest k admitting a proper colouring, by trying all k^n assignments.
inline int chromatic_number(const graph& g) {
  const int n = g.order();
  if (n == 0) return 0;
  for (int k = 1;; ++k) {
    std::vector<int> col(n, 0);
    while (true) {
      bool ok = true;
      for (auto [u, v] : g.edges()) ok = ok && col[u] != col[v];
      if (ok) return k;
      int i = 0;
      while (i < n && ++col[i] == k) col[i++] = 0;
      if (i == n) break;
    }
  }
}

/// Treewidth as the minimum over all elimination orders of the largest
/// later-neighbourhood in the filled graph.
inline int treewidth(const graph& g) {
  const int n = g.order();
  if (n == 0) return -1;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  int best = n - 1;
  do {
    small s(g);
    int width = 0;
    std::uint32_t gone = 0;
    for (int v : order) {
      const std::uint32_t later = s.adj[v] & ~gone;
      width = std::max(width, __builtin_popcount(later));
      for (int a = 0; a < n; ++a)
        if (later >> a & 1)
          for (int b = a + 1; b < n; ++b)
            if (later >> b & 1) s.link(a, b);
      gone |= 1u << v;
      if (width >= best) break;
    }
    best = std::min(best, width);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Components of g - removed, as bit masks.
inline std::vector<std::uint32_t> components_without(const small& s, std::uint32_t removed) {
  std::vector<std::uint32_t> out;
  std::uint32_t seen = removed;
  for (int v = 0; v < s.n; ++v) {
    if (seen >> v & 1) continue;
    std::uint32_t comp = 1u << v, frontier = comp;
    while (frontier) {
      const int x = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      const std::uint32_t fresh = s.adj[x] & ~comp & ~removed;
      comp |= fresh;
      frontier |= fresh;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

/// Minimal separators: vertex sets with at least two full components.
inline std::set<std::uint32_t> minimal_separators(const graph& g) {
  const small s(g);
  std::set<std::uint32_t> out;
  for (std::uint32_t sep = 0; sep < (1u << s.n); ++sep) {
    int full = 0;
    for (std::uint32_t c : components_without(s, sep)) {
      std::uint32_t nb = 0;
      for (int v = 0; v < s.n; ++v)
        if (c >> v & 1) nb |= s.adj[v];
      if ((nb & ~c) == sep) ++full;
    }
    if (full >= 2) out.insert(sep);
  }
  return out;
}

/// Maximum weight of an independent set, over all 2^n subsets.
inline std::int64_t mwis(const graph& g, const std::vector<std::int64_t>& w) {
  const small s(g);
  std::int64_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << s.n); ++mask) {
    std::int64_t total = 0;
    bool ok = true;
    for (int v = 0; v < s.n && ok; ++v)
      if (mask >> v & 1) {
        ok = (s.adj[v] & mask) == 0;
        total += w[v];
      }
    if (ok) best = std::max(best, total);
  }
  return best;
}

/// Whether some list colouring exists, over all k^n assignments.
inline bool list_colorable(const graph& g, int k, const std::vector<std::uint32_t>& lists) {
  const int n = g.order();
  std::vector<int> col(n, 0);
  while (true) {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) ok = (lists[v] >> col[v] & 1) != 0;
    for (auto [u, v] : g.edges()) ok = ok && col[u] != col[v];
    if (ok) return true;
    int i = 0;
    while (i < n && ++col[i] == k) col[i++] = 0;
    if (i == n) return false;
  }
}

/// Some induced cycle of length >= 4, by subset enumeration.
inline bool has_hole(const graph& g) {
  const small s(g);
  for (std::uint32_t mask = 0; mask < (1u << s.n); ++mask) {
    if (__builtin_popcount(mask) < 4) continue;
    bool two_regular = true;
    for (int v = 0; v < s.n && two_regular; ++v)
      if (mask >> v & 1) two_regular = __builtin_popcount(s.adj[v] & mask) == 2;
    if (two_regular && components_without(s, ~mask & ((1u << s.n) - 1)).size() == 1) return true;
  }
  return false;
}

}  // namespace oracle
