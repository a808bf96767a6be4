#include "twomega/invariants.hpp"

#include <algorithm>
#include <climits>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

namespace twomega {

// ---------------------------------------------------------------- cliques

namespace {

class clique_search {
 public:
  clique_search(const graph& g, std::uint64_t limit) : g_(g), budget_(limit, "clique search") {}

  /// Largest clique inside p, stopping as soon as one of size >= goal exists.
  /// Only cliques strictly larger than floor are recorded.
  vertex_set run(const vertex_set& p, int floor, int goal) {
    best_size_ = floor;
    goal_ = goal;
    best_.clear();
    done_ = false;
    vertex_set r;
    expand(r, 0, p);
    return best_;
  }
  int best_size() const { return best_size_; }

 private:
  void expand(vertex_set& r, int rsize, vertex_set p) {
    budget_.charge();
    // Greedy colouring: class c holds vertices whose colour bound is c.
    std::vector<vertex> order;
    std::vector<int> bound;
    vertex_set uncoloured = p;
    for (int colour = 1; !uncoloured.empty(); ++colour) {
      vertex_set q = uncoloured;
      while (!q.empty()) {
        vertex v = q.first();
        q.erase(v);
        q -= g_.neighbors(v);
        uncoloured.erase(v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (rsize + bound[i] <= best_size_) return;
      vertex v = order[i];
      r.insert(v);
      vertex_set next = p & g_.neighbors(v);
      if (rsize + 1 > best_size_ && (next.empty() || rsize + 1 >= goal_)) {
        best_ = r;
        best_size_ = rsize + 1;
        if (best_size_ >= goal_) done_ = true;
      }
      if (!done_ && !next.empty()) expand(r, rsize + 1, next);
      r.erase(v);
      p.erase(v);
      if (done_) return;
    }
  }

  const graph& g_;
  search_budget budget_;
  vertex_set best_;
  int best_size_ = 0;
  int goal_ = INT_MAX;
  bool done_ = false;
};

}  // namespace

std::optional<vertex_set> find_clique(const graph& g, int size, const vertex_set& within, std::uint64_t node_limit) {
  if (size <= 0) return vertex_set{};
  clique_search s(g, node_limit);
  vertex_set found = s.run(within, size - 1, size);
  if (s.best_size() < size) return std::nullopt;
  vertex_set out;
  for (vertex v : found) {
    if (out.size() == size) break;
    out.insert(v);
  }
  return out;
}

clique_result clique_number(const graph& g, std::uint64_t node_limit) {
  clique_result res;
  if (g.order() == 0) return res;
  clique_search s(g, node_limit);
  s.run(g.vertices(), 0, INT_MAX);
  res.value = s.best_size();
  // Rebuild the lexicographically smallest maximum clique greedily.
  vertex_set candidates = g.vertices();
  for (int need = res.value; need > 0; --need) {
    for (vertex v : candidates) {
      vertex_set rest = candidates & g.neighbors(v);
      rest -= vertex_set::range(v + 1);
      if (need == 1 || find_clique(g, need - 1, rest, node_limit)) {
        res.witness.insert(v);
        candidates = rest;
        break;
      }
    }
  }
  return res;
}

clique_result independence_number(const graph& g, std::uint64_t node_limit) {
  return clique_number(complement(g), node_limit);
}

// --------------------------------------------------------------- colouring

namespace {

class colouring_search {
 public:
  colouring_search(const graph& g, std::uint64_t limit)
      : g_(g), n_(g.order()), budget_(limit, "chromatic number") {}

  /// DSATUR backtracking: is g k-colourable?
  bool colourable(int k) {
    colour_.assign(n_, -1);
    return dsatur(k, 0, 0);
  }

  /// First k-colouring in lexicographic order of the colour vector.
  std::optional<std::vector<int>> lex_first(int k) {
    colour_.assign(n_, -1);
    if (!in_order(k, 0, 0)) return std::nullopt;
    return colour_;
  }

 private:
  std::uint32_t used_by_neighbours(vertex v) const {
    std::uint32_t mask = 0;
    for (vertex w : g_.neighbors(v))
      if (colour_[w] >= 0) mask |= 1u << colour_[w];
    return mask;
  }

  bool dsatur(int k, int coloured, int max_used) {
    if (coloured == n_) return true;
    budget_.charge();
    vertex pick = -1;
    int best_sat = -1, best_deg = -1;
    for (vertex v = 0; v < n_; ++v) {
      if (colour_[v] >= 0) continue;
      int sat = std::popcount(used_by_neighbours(v));
      int deg = 0;
      for (vertex w : g_.neighbors(v)) deg += colour_[w] < 0 ? 1 : 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    std::uint32_t blocked = used_by_neighbours(pick);
    const int top = std::min(k - 1, max_used);
    for (int c = 0; c <= top; ++c) {
      if (blocked >> c & 1) continue;
      colour_[pick] = c;
      if (dsatur(k, coloured + 1, std::max(max_used, c + 1))) return true;
    }
    colour_[pick] = -1;
    return false;
  }

  bool in_order(int k, vertex v, int max_used) {
    if (v == n_) return true;
    budget_.charge();
    std::uint32_t blocked = used_by_neighbours(v);
    const int top = std::min(k - 1, max_used);
    for (int c = 0; c <= top; ++c) {
      if (blocked >> c & 1) continue;
      colour_[v] = c;
      if (forward_ok(k, v) && in_order(k, v + 1, std::max(max_used, c + 1))) return true;
    }
    colour_[v] = -1;
    return false;
  }

  // Every uncoloured neighbour of v still has a free colour.
  bool forward_ok(int k, vertex v) const {
    const std::uint32_t all = k >= 32 ? ~0u : ((1u << k) - 1);
    for (vertex w : g_.neighbors(v))
      if (colour_[w] < 0 && (used_by_neighbours(w) & all) == all) return false;
    return true;
  }

  const graph& g_;
  int n_;
  search_budget budget_;
  std::vector<int> colour_;
};

}  // namespace

coloring_result chromatic_number(const graph& g, std::uint64_t node_limit) {
  coloring_result res;
  const int n = g.order();
  if (n == 0) return res;
  if (n > 32) throw argument_error("chromatic_number: supported up to 32 vertices");
  int lower = std::max(1, clique_number(g, node_limit).value);
  colouring_search s(g, node_limit);
  int k = lower;
  while (!s.colourable(k)) ++k;
  res.value = k;
  res.colors = *s.lex_first(k);
  return res;
}

// -------------------------------------------------------------- treewidth

namespace {

using adjacency = std::vector<vertex_set>;

void eliminate(adjacency& adj, vertex_set& remaining, vertex v) {
  const vertex_set nb = adj[v];
  for (vertex a : nb) {
    adj[a] |= nb;
    adj[a].erase(a);
    adj[a].erase(v);
  }
  adj[v].clear();
  remaining.erase(v);
}

int fill_in(const adjacency& adj, vertex v) {
  int missing = 0;
  const vertex_set& nb = adj[v];
  for (vertex a : nb) missing += (nb - adj[a]).size() - 1;
  return missing / 2;
}

/// Greedy elimination; min_fill selects by fill-in, otherwise by degree.
/// Ties go to the smaller vertex index.
std::pair<int, std::vector<vertex>> greedy_order(adjacency adj, vertex_set remaining, bool min_fill) {
  int width = -1;
  std::vector<vertex> order;
  while (!remaining.empty()) {
    vertex pick = -1;
    long best = LONG_MAX;
    for (vertex v : remaining) {
      long score = min_fill ? static_cast<long>(fill_in(adj, v)) * 1024 + adj[v].size() : adj[v].size();
      if (score < best) {
        best = score;
        pick = v;
      }
    }
    width = std::max(width, adj[pick].size());
    order.push_back(pick);
    eliminate(adj, remaining, pick);
  }
  return {width, order};
}

int degeneracy_of(adjacency adj, vertex_set remaining) {
  int d = 0;
  while (!remaining.empty()) {
    vertex pick = -1;
    int best = INT_MAX;
    for (vertex v : remaining)
      if (adj[v].size() < best) {
        best = adj[v].size();
        pick = v;
      }
    d = std::max(d, best);
    for (vertex a : adj[pick]) adj[a].erase(pick);
    remaining.erase(pick);
  }
  return d;
}

/// Minor-min-width: repeatedly contract a minimum-degree vertex into its
/// neighbour of least degree; the largest minimum degree seen bounds tw.
int minor_min_width_of(adjacency adj, vertex_set remaining) {
  int lb = 0;
  while (remaining.size() > 1) {
    vertex v = -1;
    int best = INT_MAX;
    for (vertex x : remaining)
      if (adj[x].size() < best) {
        best = adj[x].size();
        v = x;
      }
    lb = std::max(lb, best);
    if (best == 0) {
      remaining.erase(v);
      continue;
    }
    vertex u = -1;
    int ud = INT_MAX;
    for (vertex x : adj[v])
      if (adj[x].size() < ud) {
        ud = adj[x].size();
        u = x;
      }
    // Contract v into u.
    for (vertex a : adj[v]) {
      adj[a].erase(v);
      if (a != u) {
        adj[a].insert(u);
        adj[u].insert(a);
      }
    }
    adj[v].clear();
    remaining.erase(v);
  }
  return lb;
}

adjacency adjacency_of(const graph& g) {
  adjacency adj(g.order());
  for (vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

/// Depth-first search over elimination orderings for width <= k.
///
/// A state is the set R of vertices not yet eliminated; the filled graph on R
/// (u ~ v iff joined by a path through eliminated vertices) depends on R
/// only, which makes R a sound memo key. Components of the filled graph are
/// solved independently; by the same path argument each component's filled
/// graph equals the one for the state where everything else is eliminated.
class treewidth_decider {
 public:
  treewidth_decider(int k, std::uint64_t limit) : k_(k), budget_(limit, "treewidth") {}

  bool solve(adjacency adj, vertex_set remaining, std::vector<vertex>& order) {
    if (remaining.size() <= k_ + 1) {
      for (vertex v : remaining) order.push_back(v);
      return true;
    }
    if (failed_.contains(remaining)) return false;
    budget_.charge();

    std::vector<vertex_set> parts;
    {
      vertex_set left = remaining;
      while (!left.empty()) {
        vertex_set comp{left.first()}, frontier = comp;
        while (!frontier.empty()) {
          vertex_set next;
          for (vertex v : frontier) next |= adj[v];
          next -= comp;
          comp |= next;
          frontier = next;
        }
        parts.push_back(comp);
        left -= comp;
      }
    }
    if (parts.size() > 1) {
      std::sort(parts.begin(), parts.end(), [](const vertex_set& a, const vertex_set& b) { return a.size() < b.size(); });
      const std::size_t mark = order.size();
      for (const auto& part : parts) {
        if (!solve(adj, part, order)) {
          order.resize(mark);
          failed_.insert(remaining);
          return false;
        }
      }
      return true;
    }

    // Safe reductions: a simplicial or almost simplicial vertex of degree
    // <= k can be eliminated first without loss.
    for (vertex v : remaining) {
      if (adj[v].size() > k_) continue;
      if (almost_simplicial(adj, v)) {
        const std::size_t mark = order.size();
        adjacency next = adj;
        vertex_set rest = remaining;
        eliminate(next, rest, v);
        order.push_back(v);
        if (solve(std::move(next), rest, order)) return true;
        order.resize(mark);
        failed_.insert(remaining);
        return false;
      }
    }

    if (minor_min_width_of(adj, remaining) > k_) {
      failed_.insert(remaining);
      return false;
    }
    {
      auto [w, greedy] = greedy_order(adj, remaining, false);
      if (w <= k_) {
        order.insert(order.end(), greedy.begin(), greedy.end());
        return true;
      }
    }

    std::vector<std::pair<long, vertex>> candidates;
    for (vertex v : remaining)
      if (adj[v].size() <= k_) candidates.emplace_back(static_cast<long>(fill_in(adj, v)) * 1024 + adj[v].size(), v);
    std::sort(candidates.begin(), candidates.end());
    for (auto [score, v] : candidates) {
      adjacency next = adj;
      vertex_set rest = remaining;
      eliminate(next, rest, v);
      const std::size_t mark = order.size();
      order.push_back(v);
      if (solve(std::move(next), rest, order)) return true;
      order.resize(mark);
    }
    failed_.insert(remaining);
    return false;
  }

 private:
  static bool almost_simplicial(const adjacency& adj, vertex v) {
    const vertex_set& nb = adj[v];
    vertex_set bad;  // neighbours not adjacent to every other neighbour
    for (vertex a : nb) {
      vertex_set miss = nb - adj[a];
      miss.erase(a);
      if (!miss.empty()) bad.insert(a);
    }
    if (bad.empty()) return true;
    // Some w must be adjacent-deficient with everyone in bad - w.
    for (vertex w : bad) {
      vertex_set others = nb;
      others.erase(w);
      bool clique = true;
      for (vertex a : others) {
        vertex_set miss = others - adj[a];
        miss.erase(a);
        if (!miss.empty()) {
          clique = false;
          break;
        }
      }
      if (clique) return true;
    }
    return false;
  }

  int k_;
  search_budget budget_;
  std::unordered_set<vertex_set, vertex_set_hash> failed_;
};

}  // namespace

int degeneracy(const graph& g) { return degeneracy_of(adjacency_of(g), g.vertices()); }

int minor_min_width(const graph& g) { return minor_min_width_of(adjacency_of(g), g.vertices()); }

treewidth_bounds_result treewidth_bounds(const graph& g) {
  treewidth_bounds_result res;
  if (g.order() == 0) return res;
  auto adj = adjacency_of(g);
  res.lower = std::max(degeneracy_of(adj, g.vertices()), minor_min_width_of(adj, g.vertices()));
  auto fill = greedy_order(adj, g.vertices(), true);
  auto deg = greedy_order(adj, g.vertices(), false);
  if (deg.first < fill.first) {
    res.upper = deg.first;
    res.upper_order = deg.second;
  } else {
    res.upper = fill.first;
    res.upper_order = fill.second;
  }
  return res;
}

std::optional<std::vector<vertex>> treewidth_at_most(const graph& g, int k, std::uint64_t node_limit) {
  if (k < -1) return std::nullopt;
  std::vector<vertex> order;
  if (g.order() == 0) return order;
  if (k < 0) return std::nullopt;
  treewidth_decider d(k, node_limit);
  if (!d.solve(adjacency_of(g), g.vertices(), order)) return std::nullopt;
  return order;
}

treewidth_result treewidth_exact(const graph& g, std::uint64_t node_limit) {
  treewidth_result res;
  if (g.order() == 0) {
    res.decomposition = decomposition_from_order(g, {});
    return res;
  }
  auto bounds = treewidth_bounds(g);
  int lower = bounds.lower;
  try {
    lower = std::max(lower, clique_number(g, node_limit).value - 1);
  } catch (const budget_exceeded&) {
  }
  std::vector<vertex> order = bounds.upper_order;
  int value = bounds.upper;
  for (int k = lower; k < bounds.upper; ++k) {
    if (auto found = treewidth_at_most(g, k, node_limit)) {
      order = std::move(*found);
      value = k;
      break;
    }
  }
  res.value = value;
  res.elimination_order = order;
  res.decomposition = decomposition_from_order(g, order);
  return res;
}

// -------------------------------------------------------------- separators

std::vector<vertex_set> full_components(const graph& g, const vertex_set& s) {
  std::vector<vertex_set> out;
  for (const auto& c : components_within(g, g.vertices() - s))
    if (g.neighbors_of(c) == s) out.push_back(c);
  return out;
}

std::vector<separator_report> minimal_separators(const graph& g, std::uint64_t node_limit) {
  search_budget budget(node_limit, "minimal separators");
  std::set<vertex_set> found;
  std::vector<vertex_set> queue;
  auto offer = [&](const vertex_set& avoid) {
    for (const auto& c : components_within(g, g.vertices() - avoid)) {
      vertex_set s = g.neighbors_of(c);
      if (found.insert(s).second) queue.push_back(s);
    }
  };
  // Close neighbourhoods of components of G - N[v], then the Berry-Bordat
  // closure step S -> N(C) for components C of G - (S + N(x)), x in S.
  for (vertex v = 0; v < g.order(); ++v) {
    budget.charge();
    offer(g.closed_neighbors(v));
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const vertex_set s = queue[i];
    for (vertex x : s) {
      budget.charge();
      offer(s | g.neighbors(x));
    }
  }

  std::vector<separator_report> out;
  for (const auto& s : found) {
    auto full = full_components(g, s);
    if (full.size() < 2) continue;  // not separating any pair minimally
    separator_report r;
    r.separator = s;
    r.full_components = full;
    r.endpoints = {full[0].first(), full[1].first()};
    out.push_back(std::move(r));
  }
  return out;
}

// ------------------------------------------------------------------ ramsey

std::int64_t ramsey_upper(int k, int l) {
  if (k < 1 || l < 1) throw argument_error("ramsey_upper: arguments must be positive");
  const int top = k + l - 2;
  const int r = std::min(k - 1, l - 1);
  __int128 c = 1;
  for (int i = 1; i <= r; ++i) {
    c = c * (top - r + i) / i;
    if (c > std::numeric_limits<std::int64_t>::max())
      throw argument_error("ramsey_upper(" + std::to_string(k) + ", " + std::to_string(l) + ") overflows 64 bits");
  }
  return static_cast<std::int64_t>(c);
}

}  // namespace twomega
