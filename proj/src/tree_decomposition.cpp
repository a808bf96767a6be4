#include "twomega/tree_decomposition.hpp"

#include <algorithm>
#include <string>

namespace twomega {

int tree_decomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, b.size() - 1);
  return w;
}

namespace {

td_check fail(td_check::axiom a, std::string msg, std::vector<vertex> witness = {}) {
  return {a, std::move(msg), std::move(witness)};
}

bool nodes_connected(int nodes, const std::vector<std::vector<int>>& adj, const std::vector<bool>& member) {
  int start = -1, count = 0;
  for (int t = 0; t < nodes; ++t)
    if (member[t]) {
      ++count;
      if (start < 0) start = t;
    }
  if (count == 0) return true;
  std::vector<bool> seen(nodes, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 0;
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    ++reached;
    for (int s : adj[t])
      if (member[s] && !seen[s]) {
        seen[s] = true;
        stack.push_back(s);
      }
  }
  return reached == count;
}

}  // namespace

td_check validate_tree_decomposition(const graph& g, const tree_decomposition& td) {
  using axiom = td_check::axiom;
  const int nodes = td.node_count();
  if (nodes == 0) return fail(axiom::not_a_tree, "decomposition has no nodes");
  if (static_cast<int>(td.tree_edges.size()) != nodes - 1)
    return fail(axiom::not_a_tree, "tree has " + std::to_string(td.tree_edges.size()) + " edges for " +
                                       std::to_string(nodes) + " nodes");
  std::vector<std::vector<int>> adj(nodes);
  for (auto [a, b] : td.tree_edges) {
    if (a < 0 || b < 0 || a >= nodes || b >= nodes || a == b)
      return fail(axiom::not_a_tree, "tree edge {" + std::to_string(a) + "," + std::to_string(b) + "} is invalid");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (!nodes_connected(nodes, adj, std::vector<bool>(nodes, true)))
    return fail(axiom::not_a_tree, "tree is disconnected");

  const vertex_set all = g.vertices();
  for (int t = 0; t < nodes; ++t)
    if (!td.bags[t].is_subset_of(all))
      return fail(axiom::bag_out_of_range, "bag " + std::to_string(t) + " names a vertex outside the graph",
                  {(td.bags[t] - all).first()});

  vertex_set covered;
  for (const auto& b : td.bags) covered |= b;
  if (vertex_set missing = all - covered; !missing.empty())
    return fail(axiom::vertex_uncovered, "vertex " + std::to_string(missing.first()) + " is in no bag",
                {missing.first()});

  for (auto [u, v] : g.edges()) {
    bool found = std::any_of(td.bags.begin(), td.bags.end(),
                             [&](const vertex_set& b) { return b.contains(u) && b.contains(v); });
    if (!found)
      return fail(axiom::edge_uncovered,
                  "edge {" + std::to_string(u) + "," + std::to_string(v) + "} is in no bag", {u, v});
  }

  for (vertex v = 0; v < g.order(); ++v) {
    std::vector<bool> member(nodes);
    for (int t = 0; t < nodes; ++t) member[t] = td.bags[t].contains(v);
    if (!nodes_connected(nodes, adj, member))
      return fail(axiom::subtree_disconnected,
                  "bags containing vertex " + std::to_string(v) + " do not form a subtree", {v});
  }
  return {};
}

namespace {

void check_order(const graph& g, const std::vector<vertex>& order) {
  if (static_cast<int>(order.size()) != g.order()) throw argument_error("elimination order has wrong length");
  vertex_set seen;
  for (vertex v : order) {
    if (v < 0 || v >= g.order() || seen.contains(v)) throw argument_error("elimination order is not a permutation");
    seen.insert(v);
  }
}

}  // namespace

int elimination_width(const graph& g, const std::vector<vertex>& order) {
  check_order(g, order);
  graph filled = g;
  int width = -1;
  for (vertex v : order) {
    vertex_set nb = filled.neighbors(v);
    width = std::max(width, nb.size());
    for (vertex a : nb)
      for (vertex b = nb.next(a); b >= 0; b = nb.next(b)) filled.add_edge(a, b);
    for (vertex a : nb) filled.remove_edge(v, a);
  }
  return width;
}

tree_decomposition decomposition_from_order(const graph& g, const std::vector<vertex>& order) {
  check_order(g, order);
  tree_decomposition td;
  const int n = g.order();
  if (n == 0) {
    td.bags.emplace_back();
    return td;
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  graph filled = g;
  std::vector<int> roots;
  td.bags.resize(n);
  for (int i = 0; i < n; ++i) {
    vertex v = order[i];
    vertex_set later = filled.neighbors(v);
    td.bags[i] = later;
    td.bags[i].insert(v);
    for (vertex a : later)
      for (vertex b = later.next(a); b >= 0; b = later.next(b)) filled.add_edge(a, b);
    for (vertex a : later) filled.remove_edge(v, a);
    if (later.empty()) {
      roots.push_back(i);
    } else {
      int parent = n;
      for (vertex a : later) parent = std::min(parent, pos[a]);
      td.tree_edges.emplace_back(i, parent);
    }
  }
  for (std::size_t r = 1; r < roots.size(); ++r) td.tree_edges.emplace_back(roots[r - 1], roots[r]);
  return td;
}

}  // namespace twomega
