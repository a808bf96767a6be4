#include "twomega/classes.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "twomega/canonical.hpp"
#include "twomega/generators.hpp"

namespace twomega {

namespace {

int edges_within(const graph& g, const vertex_set& s) {
  int twice = 0;
  for (vertex v : s) twice += (g.neighbors(v) & s).size();
  return twice / 2;
}

/// c, then a shortest a-b path avoiding the rest of N[c]. a and b must be
/// nonadjacent neighbors of c; the result is a hole when the path exists.
std::vector<vertex> hole_through(const graph& g, vertex c, vertex a, vertex b) {
  vertex_set blocked = g.closed_neighbors(c);
  blocked.erase(a);
  blocked.erase(b);
  const vertex_set allowed = g.vertices() - blocked;
  std::vector<vertex> parent(g.order(), -1);
  std::deque<vertex> queue{a};
  parent[a] = a;
  while (!queue.empty()) {
    vertex v = queue.front();
    queue.pop_front();
    if (v == b) break;
    for (vertex w : g.neighbors(v) & allowed)
      if (parent[w] < 0) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  if (parent[b] < 0) return {};
  std::vector<vertex> cyc{c};
  std::vector<vertex> back;
  for (vertex v = b; v != a; v = parent[v]) back.push_back(v);
  back.push_back(a);
  cyc.insert(cyc.end(), back.rbegin(), back.rend());
  return cyc;
}

bool induced_in(const graph& h, const graph& g) { return find_subgraph(h, g, true).has_value(); }

}  // namespace

chordal_result is_chordal(const graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<vertex> visit;
  vertex_set numbered;
  for (int step = 0; step < n; ++step) {
    vertex best = -1;
    for (vertex v = 0; v < n; ++v)
      if (!numbered.contains(v) && (best < 0 || weight[v] > weight[best])) best = v;
    visit.push_back(best);
    numbered.insert(best);
    for (vertex w : g.neighbors(best)) ++weight[w];
  }
  chordal_result out;
  out.elimination_order.assign(visit.rbegin(), visit.rend());
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[out.elimination_order[i]] = i;

  for (vertex v : out.elimination_order) {
    vertex parent = -1;
    for (vertex w : g.neighbors(v))
      if (pos[w] > pos[v] && (parent < 0 || pos[w] < pos[parent])) parent = w;
    if (parent < 0) continue;
    for (vertex w : g.neighbors(v)) {
      if (pos[w] <= pos[v] || w == parent || g.adjacent(w, parent)) continue;
      out.elimination_order.clear();
      out.hole = hole_through(g, v, parent, w);
      if (out.hole.empty()) {
        // The failing triple need not lie on a hole; some triple does.
        for (vertex c = 0; c < n && out.hole.empty(); ++c)
          for (vertex a : g.neighbors(c)) {
            for (vertex b : g.neighbors(c))
              if (a < b && !g.adjacent(a, b)) {
                out.hole = hole_through(g, c, a, b);
                if (!out.hole.empty()) break;
              }
            if (!out.hole.empty()) break;
          }
      }
      return out;
    }
  }
  out.chordal = true;
  return out;
}

block_cactus_result is_block_cactus(const graph& g) {
  block_cactus_result out;
  for (const vertex_set& b : blocks(g)) {
    const int k = b.size();
    if (k <= 2) continue;
    const int m = edges_within(g, b);
    if (m == k * (k - 1) / 2 || m == k) continue;  // a 2-connected graph with k edges is a cycle
    out.offending_block = b;
    return out;
  }
  out.block_cactus = true;
  return out;
}

bool in_class_S(const graph& h) {
  for (const vertex_set& c : components(h)) {
    if (edges_within(h, c) != c.size() - 1) return false;
    int branch = 0;
    for (vertex v : c) {
      const int d = h.degree(v);
      if (d > 3) return false;
      if (d == 3) ++branch;
    }
    if (branch > 1) return false;
  }
  return true;
}

bool is_subcubic(const graph& g) { return g.order() == 0 || g.max_degree() <= 3; }

bool is_edgeless(const graph& g) { return g.size() == 0; }

bool is_planar(const graph& g) {
  const int n = g.order();
  if (n >= 3 && g.size() > 3 * n - 6) return false;
  using boost_graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  boost_graph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

bool is_planar_wagner(const graph& g, std::uint64_t node_limit) {
  const int n = g.order();
  if (n < 5) return true;
  if (g.size() > 3 * n - 6) return false;
  for (const graph& obstruction : {complete(5), complete_bipartite(3, 3)}) {
    containment_result r = contains(obstruction, g, relation::minor, node_limit);
    if (r.result == outcome::refused) throw budget_exceeded("is_planar_wagner", node_limit);
    if (r.found()) return false;
  }
  return true;
}

bool is_complete_bipartite(const graph& g) {
  const graph co = complement(g);
  const auto parts = components(co);
  if (parts.size() > 2) return false;
  return std::all_of(parts.begin(), parts.end(), [&](const vertex_set& p) { return is_clique(co, p); });
}

k1q_result k1q_induced_minor_free(const graph& g, int q, std::uint64_t node_limit) {
  if (q < 1) throw argument_error("k1q_induced_minor_free: q must be at least 1");
  search_budget budget(node_limit, "k1q_induced_minor_free");
  k1q_result out;
  vertex_set chosen;
  const int n = g.order();
  std::function<bool(vertex, int)> extend = [&](vertex from, int left) {
    budget.charge();
    if (left == 0) {
      for (const vertex_set& c : components_within(g, g.vertices() - chosen)) {
        bool sees_all = true;
        for (vertex s : chosen)
          if (!g.neighbors(s).intersects(c)) {
            sees_all = false;
            break;
          }
        if (sees_all) {
          out.free = false;
          out.witness = k1q_witness{chosen, c};
          return true;
        }
      }
      return false;
    }
    for (vertex v = from; v + left <= n; ++v) {
      if (g.neighbors(v).intersects(chosen)) continue;
      chosen.insert(v);
      if (extend(v + 1, left - 1)) return true;
      chosen.erase(v);
    }
    return false;
  };
  extend(0, q);
  return out;
}

dichotomy_verdict dichotomy(const graph& h, relation rel) {
  const int n = h.order();
  if (n > max_dichotomy_pattern)
    throw argument_error("dichotomy: patterns are limited to " + std::to_string(max_dichotomy_pattern) + " vertices");
  dichotomy_verdict v;
  v.rel = rel;
  v.pattern = h;
  auto bounded = [&](binding_function f, std::string why) {
    v.bounded = true;
    v.binding = f;
    v.reason = std::move(why);
    return v;
  };
  auto unbounded = [&](std::string why) {
    v.bounded = false;
    v.reason = std::move(why);
    return v;
  };
  if (n == 0) return bounded(binding_function::fixed(0), "empty pattern: only the empty graph excludes it");

  switch (rel) {
    case relation::induced_subgraph:
      if (induced_in(h, path(3))) return bounded(binding_function::linear(-1), "H is an induced subgraph of P3");
      if (is_edgeless(h)) return bounded(binding_function::ramsey(n), "H is edgeless");
      return unbounded("H is neither an induced subgraph of P3 nor edgeless");

    case relation::induced_topological_minor:
      if (induced_in(h, cycle(3))) return bounded(binding_function::linear(-1), "H is an induced subgraph of C3");
      if (induced_in(h, cycle(4))) return bounded(binding_function::linear(-1), "H is an induced subgraph of C4");
      if (n == 4 && isomorphic(h, complete_minus_edge(4)))
        return bounded(binding_function::max_with(-1, 2), "H is isomorphic to K4-");
      if (is_edgeless(h)) return bounded(binding_function::ramsey(n), "H is edgeless");
      return unbounded("H is not an induced subgraph of C3 or C4, not K4-, and not edgeless");

    case relation::induced_minor: {
      // An induced subgraph of K_2,q uses at most n vertices of the large side.
      for (int q = 1; q <= n; ++q)
        if (induced_in(h, complete_bipartite(2, q)))
          return bounded(binding_function::skodinis(q), "H is an induced subgraph of K2," + std::to_string(q));
      // K_2,q+ is an induced minor of K_2,q+1, so its exclusion inherits that binding.
      for (int q = 1; q <= n; ++q)
        if (induced_in(h, k2q_plus(q)))
          return bounded(binding_function::skodinis(q + 1),
                         "H is an induced subgraph of K2," + std::to_string(q) + "+");
      if (induced_in(h, wheel4())) return bounded(binding_function::unknown_constant(), "H is an induced subgraph of W4");
      if (induced_in(h, complete_minus_edge(5)))
        return bounded(binding_function::unknown_constant(), "H is an induced subgraph of K5-");
      return unbounded("H is not an induced subgraph of W4, K5-, K2,q or K2,q+");
    }

    case relation::subgraph:
      if (in_class_S(h)) return bounded(binding_function::unknown_constant(), "H is in S");
      return unbounded("H is not in S");

    case relation::topological_minor:
      if (is_subcubic(h) && is_planar(h))
        return bounded(binding_function::unknown_constant(), "H is subcubic and planar");
      return unbounded(is_subcubic(h) ? "H is not planar" : "H is not subcubic");

    case relation::minor:
      if (is_planar(h)) return bounded(binding_function::unknown_constant(), "H is planar");
      return unbounded("H is not planar");
  }
  return v;
}

std::optional<graph> line_graph_root_in_S(const graph& h) {
  const int m = h.order();
  if (m > max_dichotomy_pattern)
    throw argument_error("line_graph_root_in_S: patterns are limited to " + std::to_string(max_dichotomy_pattern) +
                         " vertices");
  if (m == 0) return graph(0);

  // Roots without isolated vertices: disjoint unions of paths with at least
  // one edge and subdivided claws, m edges in total.
  std::vector<graph> shapes;
  for (int a = 1; a <= m; ++a) shapes.push_back(path(a + 1));
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= a; ++b)
      for (int c = 1; c <= b && a + b + c <= m; ++c) shapes.push_back(subdivided_claw(a, b, c));

  const graph target = canonical_form(h);
  std::optional<graph> found;
  std::function<void(std::size_t, int, const graph&)> build = [&](std::size_t from, int left, const graph& root) {
    if (found) return;
    if (left == 0) {
      if (canonical_form(line_graph(root)) == target) found = root;
      return;
    }
    for (std::size_t i = from; i < shapes.size() && !found; ++i)
      if (shapes[i].size() <= left) build(i, left - shapes[i].size(), disjoint_union(root, shapes[i]));
  };
  build(0, m, graph(0));
  return found;
}

finite_set_verdict finite_set_induced_subgraph_dichotomy(const std::vector<graph>& hs) {
  finite_set_verdict out;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!out.complete_bipartite_member && is_complete_bipartite(hs[i])) out.complete_bipartite_member = i;
    if (!out.s_member && in_class_S(hs[i])) out.s_member = i;
    if (!out.line_graph_member && line_graph_root_in_S(hs[i])) out.line_graph_member = i;
  }
  out.bounded = out.complete_bipartite_member && out.s_member && out.line_graph_member;
  if (out.bounded) {
    out.reason = "the set has a complete bipartite graph, a member of S and a line graph of a member of S";
  } else {
    std::vector<std::string> missing;
    if (!out.complete_bipartite_member) missing.push_back("no complete bipartite graph");
    if (!out.s_member) missing.push_back("no member of S");
    if (!out.line_graph_member) missing.push_back("no line graph of a member of S");
    out.reason = "the set has ";
    for (std::size_t i = 0; i < missing.size(); ++i) out.reason += (i ? ", " : "") + missing[i];
  }
  return out;
}

}  // namespace twomega
