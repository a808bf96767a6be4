#include "twomega/graph.hpp"

#include <algorithm>
#include <string>

namespace twomega {

graph::graph(int n) {
  if (n < 0 || n > vertex_set::capacity)
    throw argument_error("graph order " + std::to_string(n) + " outside [0, " +
                         std::to_string(vertex_set::capacity) + "]");
  adj_.resize(n);
}

graph graph::from_edges(int n, std::span<const edge> edges) {
  graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

int graph::size() const {
  int twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

int graph::max_degree() const {
  int d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

vertex_set graph::neighbors_of(const vertex_set& s) const {
  vertex_set out;
  for (vertex v : s) out |= adj_[v];
  return out - s;
}

void graph::check_vertex(vertex v) const {
  if (v < 0 || v >= order())
    throw argument_error("vertex " + std::to_string(v) + " out of range for order " +
                         std::to_string(order()));
}

void graph::add_edge(vertex u, vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw argument_error("self-loop at vertex " + std::to_string(u));
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void graph::remove_edge(vertex u, vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[u].erase(v);
  adj_[v].erase(u);
}

std::vector<edge> graph::edges() const {
  std::vector<edge> out;
  for (vertex u = 0; u < order(); ++u)
    for (vertex v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

weighted_graph::weighted_graph(twomega::graph g, std::vector<std::int64_t> w)
    : graph(std::move(g)), weights(std::move(w)) {
  if (static_cast<int>(weights.size()) != graph.order())
    throw argument_error("weight vector length differs from graph order");
  for (auto x : weights)
    if (x < 0) throw argument_error("vertex weights must be nonnegative");
}

std::int64_t weighted_graph::weight_of(const vertex_set& s) const {
  std::int64_t total = 0;
  for (vertex v : s) total += weights[v];
  return total;
}

graph induced_subgraph(const graph& g, const vertex_set& keep) {
  std::vector<int> index(g.order(), -1);
  int k = 0;
  for (vertex v : keep) {
    if (v >= g.order()) throw argument_error("induced_subgraph: vertex " + std::to_string(v) + " out of range");
    index[v] = k++;
  }
  graph h(k);
  for (vertex u : keep)
    for (vertex v : g.neighbors(u) & keep)
      if (u < v) h.add_edge(index[u], index[v]);
  return h;
}

graph delete_vertex(const graph& g, vertex v) {
  if (v < 0 || v >= g.order()) throw argument_error("delete_vertex: vertex out of range");
  vertex_set keep = g.vertices();
  keep.erase(v);
  return induced_subgraph(g, keep);
}

graph delete_edge(const graph& g, vertex u, vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw argument_error("delete_edge: not an edge");
  graph h = g;
  h.remove_edge(u, v);
  return h;
}

graph contract_edge(const graph& g, vertex u, vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw argument_error("contract_edge: {" + std::to_string(u) + "," + std::to_string(v) +
                         "} is not an edge");
  if (u > v) std::swap(u, v);
  graph merged = g;
  for (vertex w : g.neighbors(v))
    if (w != u) merged.add_edge(u, w);
  return delete_vertex(merged, v);
}

graph subdivide_edge(const graph& g, vertex u, vertex v) {
  if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw argument_error("subdivide_edge: not an edge");
  auto es = g.edges();
  graph h(g.order() + 1);
  for (auto [a, b] : es)
    if (!((a == u && b == v) || (a == v && b == u))) h.add_edge(a, b);
  h.add_edge(u, g.order());
  h.add_edge(v, g.order());
  return h;
}

graph line_graph(const graph& g) {
  auto es = g.edges();
  graph l(static_cast<int>(es.size()));
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      auto [a, b] = es[i];
      auto [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) l.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return l;
}

graph complement(const graph& g) {
  graph h(g.order());
  for (vertex u = 0; u < g.order(); ++u)
    for (vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

graph disjoint_union(const graph& a, const graph& b) {
  graph h(a.order() + b.order());
  for (auto [u, v] : a.edges()) h.add_edge(u, v);
  for (auto [u, v] : b.edges()) h.add_edge(u + a.order(), v + a.order());
  return h;
}

graph join(const graph& a, const graph& b) {
  graph h = disjoint_union(a, b);
  for (vertex u = 0; u < a.order(); ++u)
    for (vertex v = 0; v < b.order(); ++v) h.add_edge(u, a.order() + v);
  return h;
}

namespace {

vertex_set reach(const graph& g, vertex start, const vertex_set& within) {
  vertex_set seen;
  seen.insert(start);
  vertex_set frontier = seen;
  while (!frontier.empty()) {
    vertex_set next;
    for (vertex v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

std::vector<vertex_set> components_within(const graph& g, const vertex_set& within) {
  std::vector<vertex_set> out;
  vertex_set left = within;
  while (!left.empty()) {
    vertex_set c = reach(g, left.first(), within);
    out.push_back(c);
    left -= c;
  }
  return out;
}

std::vector<vertex_set> components(const graph& g) { return components_within(g, g.vertices()); }

bool is_connected(const graph& g) { return g.order() == 0 || components(g).size() == 1; }

bool induces_connected(const graph& g, const vertex_set& s) {
  if (s.empty()) return true;
  return reach(g, s.first(), s) == s;
}

bool is_independent(const graph& g, const vertex_set& s) {
  for (vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_clique(const graph& g, const vertex_set& s) {
  for (vertex v : s) {
    vertex_set rest = s;
    rest.erase(v);
    if (!rest.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

std::vector<vertex_set> bfs_levels(const graph& g, vertex v) {
  if (v < 0 || v >= g.order()) throw argument_error("bfs_levels: root out of range");
  if (!is_connected(g)) throw argument_error("bfs_levels: graph is disconnected");
  std::vector<vertex_set> levels;
  vertex_set seen;
  seen.insert(v);
  vertex_set frontier = seen;
  while (!frontier.empty()) {
    levels.push_back(frontier);
    vertex_set next;
    for (vertex u : frontier) next |= g.neighbors(u);
    next -= seen;
    seen |= next;
    frontier = next;
  }
  return levels;
}

std::vector<vertex_set> blocks(const graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<edge> stack;
  std::vector<vertex_set> out;
  int timer = 0;

  // Iterative Hopcroft-Tarjan.
  struct frame {
    vertex v, parent, next;
  };
  for (vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    if (g.degree(root) == 0) {
      disc[root] = timer++;
      out.push_back(vertex_set{root});
      continue;
    }
    std::vector<frame> dfs{{root, -1, g.neighbors(root).first()}};
    disc[root] = low[root] = timer++;
    while (!dfs.empty()) {
      frame& f = dfs.back();
      if (f.next >= 0) {
        vertex w = f.next;
        f.next = g.neighbors(f.v).next(w);
        if (w == f.parent) continue;
        if (disc[w] < 0) {
          stack.emplace_back(f.v, w);
          disc[w] = low[w] = timer++;
          dfs.push_back({w, f.v, g.neighbors(w).first()});
        } else if (disc[w] < disc[f.v]) {
          stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      vertex v = f.v, p = f.parent;
      dfs.pop_back();
      if (p < 0) continue;
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        vertex_set b;
        while (true) {
          auto [a, c] = stack.back();
          stack.pop_back();
          b.insert(a);
          b.insert(c);
          if (a == p && c == v) break;
        }
        out.push_back(b);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace twomega
