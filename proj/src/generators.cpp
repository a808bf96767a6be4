#include "twomega/generators.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "twomega/canonical.hpp"

namespace twomega {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw argument_error(msg);
}

}  // namespace

graph complete(int n) {
  require(n >= 0, "complete: n must be nonnegative");
  graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

graph complete_bipartite(int p, int q) {
  require(p >= 0 && q >= 0, "complete_bipartite: part sizes must be nonnegative");
  graph g(p + q);
  for (int u = 0; u < p; ++u)
    for (int v = 0; v < q; ++v) g.add_edge(u, p + v);
  return g;
}

graph cycle(int n) {
  require(n >= 3, "cycle: need at least 3 vertices, got " + std::to_string(n));
  graph g = path(n);
  g.add_edge(0, n - 1);
  return g;
}

graph path(int n) {
  require(n >= 0, "path: n must be nonnegative");
  graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

graph star(int q) {
  require(q >= 0, "star: q must be nonnegative");
  return complete_bipartite(1, q);
}

graph edgeless(int n) {
  require(n >= 0, "edgeless: n must be nonnegative");
  return graph(n);
}

graph complete_minus_edge(int q) {
  require(q >= 2, "complete_minus_edge: q must be at least 2");
  graph g = complete(q);
  g.remove_edge(q - 2, q - 1);
  return g;
}

graph k2q_plus(int q) {
  require(q >= 1, "k2q_plus: q must be at least 1");
  graph g = complete_bipartite(2, q);
  g.add_edge(0, 1);
  return g;
}

graph wheel4() {
  graph g = disjoint_union(cycle(4), graph(1));
  for (int v = 0; v < 4; ++v) g.add_edge(v, 4);
  return g;
}

graph subdivided_claw(int a, int b, int c) {
  require(a >= 1 && b >= 1 && c >= 1, "subdivided_claw: every leg needs at least one edge");
  graph g(1 + a + b + c);
  int next = 1;
  for (int len : {a, b, c}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
  }
  return g;
}

graph elementary_wall(int rows, int columns) {
  require(rows >= 1 && columns >= 1, "elementary_wall: rows and columns must be positive");
  const int width = 2 * columns + 2;
  const int height = rows + 1;
  require(height * width <= vertex_set::capacity + 2, "elementary_wall: too large");
  auto id = [&](int i, int j) { return i * width + j; };

  // The full lattice may exceed the vertex capacity by the two corners that
  // get trimmed, so build it as adjacency lists first.
  std::vector<std::vector<int>> adj(height * width);
  auto link = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int i = 0; i < height; ++i)
    for (int j = 0; j + 1 < width; ++j) link(id(i, j), id(i, j + 1));
  for (int i = 0; i + 1 < height; ++i)
    for (int j = 0; j < width; ++j)
      if ((j - i) % 2 == 0) link(id(i, j), id(i + 1, j));

  std::vector<bool> alive(adj.size(), true);
  auto degree = [&](int v) {
    int d = 0;
    for (int w : adj[v]) d += alive[w] ? 1 : 0;
    return d;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t v = 0; v < adj.size(); ++v)
      if (alive[v] && degree(static_cast<int>(v)) <= 1) {
        alive[v] = false;
        changed = true;
      }
  }

  std::vector<int> index(adj.size(), -1);
  int n = 0;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (alive[v]) index[v] = n++;
  graph g(n);
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (alive[v])
      for (int w : adj[v])
        if (alive[w] && static_cast<int>(v) < w) g.add_edge(index[v], index[w]);
  return g;
}

graph q_subdivided_wall(const wall_spec& spec) {
  require(spec.subdivisions >= 0, "q_subdivided_wall: subdivisions must be nonnegative");
  graph wall = elementary_wall(spec.rows, spec.columns);
  const int q = spec.subdivisions;
  auto es = wall.edges();
  const long total = wall.order() + static_cast<long>(es.size()) * q;
  require(total <= vertex_set::capacity, "q_subdivided_wall: result exceeds " +
                                             std::to_string(vertex_set::capacity) + " vertices");
  graph g(static_cast<int>(total));
  int next = wall.order();
  for (auto [u, v] : es) {
    int prev = u;
    for (int i = 0; i < q; ++i) {
      g.add_edge(prev, next);
      prev = next++;
    }
    g.add_edge(prev, v);
  }
  return g;
}

std::int64_t rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw argument_error("rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do x = next();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

bool rng::bernoulli(double p) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return u < p;
}

graph random_graph(int n, double p, std::uint64_t seed) {
  require(n >= 0 && n <= vertex_set::capacity, "random_graph: n out of range");
  require(p >= 0.0 && p <= 1.0, "random_graph: p must lie in [0, 1]");
  rng r(seed);
  graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (r.bernoulli(p)) g.add_edge(u, v);
  return g;
}

graph random_chordal(int n, int max_clique, std::uint64_t seed) {
  require(n >= 1 && n <= vertex_set::capacity, "random_chordal: n out of range");
  require(max_clique >= 1, "random_chordal: max_clique must be positive");
  rng r(seed);
  graph g(n);
  // Maximal cliques of the graph built so far. Attaching v to a subset A of
  // a maximal clique K yields the clique A + v; K stays maximal unless A = K.
  std::vector<vertex_set> cliques{vertex_set{0}};
  for (vertex v = 1; v < n; ++v) {
    std::size_t pick = static_cast<std::size_t>(r.uniform(0, static_cast<std::int64_t>(cliques.size()) - 1));
    std::vector<vertex> members = cliques[pick].to_vector();
    const int most = std::min<int>(static_cast<int>(members.size()), max_clique - 1);
    // With max_clique == 1 the new vertex stays isolated.
    int take = most >= 1 ? static_cast<int>(r.uniform(1, most)) : 0;
    for (int i = 0; i < take; ++i) {  // partial Fisher-Yates
      auto j = static_cast<std::size_t>(r.uniform(i, static_cast<std::int64_t>(members.size()) - 1));
      std::swap(members[i], members[j]);
    }
    vertex_set attached;
    for (int i = 0; i < take; ++i) {
      attached.insert(members[i]);
      g.add_edge(v, members[i]);
    }
    vertex_set fresh = attached;
    fresh.insert(v);
    if (attached == cliques[pick])
      cliques[pick] = fresh;
    else
      cliques.push_back(fresh);
  }
  return g;
}

graph random_block_cactus(int blocks, int max_block, std::uint64_t seed) {
  require(blocks >= 0, "random_block_cactus: blocks must be nonnegative");
  require(max_block >= 2, "random_block_cactus: max_block must be at least 2");
  rng r(seed);
  std::vector<edge> es;
  int n = 1;
  for (int b = 0; b < blocks; ++b) {
    const int s = static_cast<int>(r.uniform(2, max_block));
    const bool as_cycle = s >= 4 && r.bernoulli(0.5);
    const vertex anchor = static_cast<vertex>(r.uniform(0, n - 1));
    if (n + s - 1 > vertex_set::capacity) throw argument_error("random_block_cactus: too many vertices");
    std::vector<vertex> members{anchor};
    for (int i = 1; i < s; ++i) members.push_back(n++);
    if (as_cycle) {
      for (int i = 0; i < s; ++i) es.emplace_back(members[i], members[(i + 1) % s]);
    } else {
      for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j) es.emplace_back(members[i], members[j]);
    }
  }
  return graph::from_edges(n, es);
}

namespace {

void enumerate_labeled(int n, bool connected_only, const std::function<void(const graph&)>& visit,
                       std::uint64_t& count) {
  std::vector<edge> pairs;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) pairs.emplace_back(u, v);
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) g.add_edge(pairs[i].first, pairs[i].second);
    if (connected_only && !is_connected(g)) continue;
    ++count;
    visit(g);
  }
}

}  // namespace

std::uint64_t enumerate_all_graphs(int n, const enumeration_options& opts,
                                   const std::function<void(const graph&)>& visit) {
  if (n < 0) throw argument_error("enumerate_all_graphs: n must be nonnegative");
  std::uint64_t count = 0;
  if (!opts.up_to_isomorphism) {
    if (n > max_labeled_enumeration)
      throw argument_error("enumerate_all_graphs: labeled enumeration is limited to n <= " +
                           std::to_string(max_labeled_enumeration));
    enumerate_labeled(n, opts.connected_only, visit, count);
    return count;
  }
  if (n > max_iso_enumeration)
    throw argument_error("enumerate_all_graphs: isomorphism-reduced enumeration is limited to n <= " +
                         std::to_string(max_iso_enumeration));
  if (n == 0) {
    visit(graph(0));
    return 1;
  }

  // Grow level by level: every graph on k vertices is a graph on k - 1
  // vertices plus one vertex, and every connected graph has a vertex whose
  // removal keeps it connected. Deduplicate by packed canonical code.
  std::vector<std::uint64_t> level{pack_small(graph(1))};
  for (int k = 2; k <= n; ++k) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> next;
    for (std::uint64_t code : level) {
      graph parent = unpack_small(code, k - 1);
      graph child(k);
      for (auto [u, v] : parent.edges()) child.add_edge(u, v);
      const std::uint32_t subsets = std::uint32_t{1} << (k - 1);
      for (std::uint32_t s = opts.connected_only ? 1 : 0; s < subsets; ++s) {
        graph g = child;
        for (int u = 0; u < k - 1; ++u)
          if (s >> u & 1) g.add_edge(u, k - 1);
        std::uint64_t c = pack_small(canonical_form(g));
        if (seen.insert(c).second) next.push_back(c);
      }
    }
    level = std::move(next);
  }
  for (std::uint64_t code : level) {
    ++count;
    visit(unpack_small(code, n));
  }
  return count;
}

std::vector<graph> all_graphs(int n, const enumeration_options& opts) {
  std::vector<graph> out;
  enumerate_all_graphs(n, opts, [&](const graph& g) { out.push_back(g); });
  return out;
}

}  // namespace twomega
