#include "twomega/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "twomega/invariants.hpp"

namespace twomega {

namespace {

struct level_entry {
  vertex_set set;
  std::int64_t best = 0;
  int back = -1;
};

/// Independent subsets of `level` with at most `most` vertices, in
/// lexicographic order. Returns a set of size most + 1 through `overflow`
/// as soon as one exists.
std::vector<vertex_set> small_independent_subsets(const graph& g, const vertex_set& level, int most,
                                                  search_budget& budget, std::optional<vertex_set>& overflow) {
  std::vector<vertex> members = level.to_vector();
  std::vector<vertex_set> out;
  vertex_set current;
  std::function<bool(std::size_t, int)> grow = [&](std::size_t from, int size) {
    budget.charge();
    if (size == most + 1) {
      overflow = current;
      return true;
    }
    out.push_back(current);
    for (std::size_t i = from; i < members.size(); ++i) {
      vertex v = members[i];
      if (g.neighbors(v).intersects(current)) continue;
      current.insert(v);
      if (grow(i + 1, size + 1)) return true;
      current.erase(v);
    }
    return false;
  };
  grow(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

vertex_set component_containing(const graph& g, const vertex_set& removed, vertex v) {
  for (const vertex_set& c : components_within(g, g.vertices() - removed))
    if (c.contains(v)) return c;
  return {};
}

}  // namespace

mwis_k1q_result mwis_k1q(const weighted_graph& wg, int q, const mwis_k1q_options& opts) {
  if (q < 2) throw argument_error("mwis_k1q: q must be at least 2");
  const graph& g = wg.graph;
  if (g.order() <= opts.check_class_up_to) {
    k1q_result check = k1q_induced_minor_free(g, q, opts.node_limit);
    if (!check.free)
      throw k1q_precondition_error("mwis_k1q: graph contains K1," + std::to_string(q) + " as an induced minor",
                                   *check.witness);
  }
  search_budget budget(opts.node_limit, "mwis_k1q");
  mwis_k1q_result out;
  for (const vertex_set& comp : components(g)) {
    mwis_levels info;
    info.root = comp.first();
    vertex_set seen{info.root};
    info.levels.push_back(seen);
    while (true) {
      vertex_set next = g.neighbors_of(info.levels.back()) & comp;
      next -= seen;
      if (next.empty()) break;
      seen |= next;
      info.levels.push_back(next);
    }

    std::vector<std::vector<level_entry>> tables(info.levels.size());
    tables[0] = {{vertex_set{}, 0, -1}, {vertex_set{info.root}, wg.weights[info.root], -1}};
    info.table_sizes.push_back(2);
    for (std::size_t i = 1; i < info.levels.size(); ++i) {
      std::optional<vertex_set> overflow;
      auto subsets = small_independent_subsets(g, info.levels[i], q - 1, budget, overflow);
      if (overflow) {
        // Earlier levels form a connected set that every vertex of level i sees.
        throw k1q_precondition_error(
            "mwis_k1q: BFS level " + std::to_string(i) + " has " + std::to_string(q) + " independent vertices",
            k1q_witness{*overflow, component_containing(g, *overflow, info.root)});
      }
      auto& table = tables[i];
      const auto& prev = tables[i - 1];
      for (const vertex_set& s : subsets) {
        const vertex_set blocked = g.neighbors_of(s);
        level_entry e{s, 0, -1};
        for (std::size_t t = 0; t < prev.size(); ++t) {
          budget.charge();
          if (prev[t].set.intersects(blocked)) continue;
          if (e.back < 0 || prev[t].best > e.best) {
            e.best = prev[t].best;
            e.back = static_cast<int>(t);
          }
        }
        e.best += wg.weight_of(s);
        table.push_back(e);
      }
      info.table_sizes.push_back(table.size());
    }

    const auto& last = tables.back();
    int pick = 0;
    for (std::size_t s = 1; s < last.size(); ++s)
      if (last[s].best > last[pick].best) pick = static_cast<int>(s);
    out.weight += last[pick].best;
    for (int i = static_cast<int>(tables.size()) - 1; i >= 0 && pick >= 0; --i) {
      out.set |= tables[i][pick].set;
      pick = tables[i][pick].back;
    }
    out.components.push_back(std::move(info));
  }
  return out;
}

mwis_result mwis_brute(const weighted_graph& wg, std::uint64_t node_limit) {
  const graph& g = wg.graph;
  const int n = g.order();
  if (n > 22) throw argument_error("mwis_brute: limited to 22 vertices");
  search_budget budget(node_limit, "mwis_brute");
  mwis_result best;
  bool have = false;
  vertex_set chosen;
  // `open` holds the undecided vertices that are still compatible.
  std::function<void(vertex_set, std::int64_t)> go = [&](vertex_set open, std::int64_t w) {
    budget.charge();
    if (have && w + wg.weight_of(open) < best.weight) return;
    const vertex v = open.first();
    if (v < 0) {
      if (!have || w > best.weight || (w == best.weight && chosen < best.set)) {
        best = {w, chosen};
        have = true;
      }
      return;
    }
    open.erase(v);
    chosen.insert(v);
    go(open - g.neighbors(v), w + wg.weights[v]);
    chosen.erase(v);
    go(open, w);
  };
  go(g.vertices(), 0);
  return best;
}

nice_tree_decomposition make_nice(const graph& g, const tree_decomposition& td) {
  if (td_check chk = validate_tree_decomposition(g, td); !chk) throw argument_error("make_nice: " + chk.message);
  nice_tree_decomposition out;
  if (td.bags.empty()) {
    out.nodes.push_back({});
    return out;
  }
  std::vector<std::vector<int>> adj(td.bags.size());
  for (auto [a, b] : td.tree_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  auto add = [&](nice_node node) {
    out.nodes.push_back(std::move(node));
    return static_cast<int>(out.nodes.size()) - 1;
  };
  // Walks from `from` (with bag `have`) to a node with bag `want`.
  auto morph = [&](int from, vertex_set have, const vertex_set& want) {
    for (vertex v : have - want) {
      have.erase(v);
      from = add({nice_node::kind::forget, v, have, {from}});
    }
    for (vertex v : want - have) {
      have.insert(v);
      from = add({nice_node::kind::introduce, v, have, {from}});
    }
    return from;
  };
  std::function<int(int, int)> build = [&](int t, int parent) {
    std::vector<int> tops;
    for (int c : adj[t])
      if (c != parent) tops.push_back(morph(build(c, t), td.bags[c], td.bags[t]));
    if (tops.empty()) tops.push_back(morph(add({}), {}, td.bags[t]));
    int top = tops[0];
    for (std::size_t i = 1; i < tops.size(); ++i) top = add({nice_node::kind::join, -1, td.bags[t], {top, tops[i]}});
    return top;
  };
  morph(build(0, -1), td.bags[0], {});
  return out;
}

color_lists color_lists::full(int n, int k) {
  if (k < 1 || k > 31) throw argument_error("color_lists: k must lie in 1..31");
  return {k, std::vector<std::uint32_t>(n, (std::uint32_t{1} << k) - 1)};
}

std::string check_list_coloring(const graph& g, const color_lists& lists, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.order()) return "colouring has the wrong length";
  for (vertex v = 0; v < g.order(); ++v) {
    if (colors[v] < 1 || colors[v] > lists.k || !lists.allows(v, colors[v]))
      return "vertex " + std::to_string(v) + " gets colour " + std::to_string(colors[v]) + " outside its list";
    for (vertex w : g.neighbors(v))
      if (w > v && colors[w] == colors[v])
        return "edge " + std::to_string(v) + "-" + std::to_string(w) + " is monochromatic";
  }
  return {};
}

namespace {

void check_lists(const graph& g, const color_lists& lists) {
  if (lists.k < 1 || lists.k > 31) throw argument_error("list colouring: k must lie in 1..31");
  if (static_cast<int>(lists.lists.size()) != g.order()) throw argument_error("list colouring: one list per vertex");
  for (auto l : lists.lists)
    if (l >> lists.k) throw argument_error("list colouring: list mentions a colour above k");
}

int position_in(const vertex_set& bag, vertex v) { return (bag & vertex_set::range(v)).size(); }

}  // namespace

std::optional<std::vector<int>> list_coloring_on_td(const graph& g, const color_lists& lists,
                                                    const tree_decomposition& td) {
  check_lists(g, lists);
  const nice_tree_decomposition nice = make_nice(g, td);
  // State: colours of the bag vertices in ascending order, one char each.
  // The value is the colour chosen for the forgotten vertex (forget nodes).
  std::vector<std::unordered_map<std::string, char>> table(nice.nodes.size());
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    const nice_node& node = nice.nodes[i];
    auto& here = table[i];
    switch (node.type) {
      case nice_node::kind::leaf: here.emplace("", 0); break;
      case nice_node::kind::introduce: {
        const int p = position_in(node.bag, node.v);
        const auto bag = node.bag.to_vector();
        for (const auto& [s, unused] : table[node.children[0]]) {
          for (int c = 1; c <= lists.k; ++c) {
            if (!lists.allows(node.v, c)) continue;
            std::string t = s;
            t.insert(t.begin() + p, static_cast<char>(c));
            bool ok = true;
            for (std::size_t j = 0; j < bag.size() && ok; ++j)
              if (t[j] == c && bag[j] != node.v && g.adjacent(bag[j], node.v)) ok = false;
            if (ok) here.emplace(std::move(t), 0);
          }
        }
        break;
      }
      case nice_node::kind::forget: {
        const int p = position_in(nice.nodes[node.children[0]].bag, node.v);
        for (const auto& [s, unused] : table[node.children[0]]) {
          std::string t = s;
          t.erase(t.begin() + p);
          here.emplace(std::move(t), s[p]);
        }
        break;
      }
      case nice_node::kind::join:
        for (const auto& [s, unused] : table[node.children[0]])
          if (table[node.children[1]].count(s)) here.emplace(s, 0);
        break;
    }
  }
  if (!table[nice.root()].count("")) return std::nullopt;

  std::vector<int> colors(g.order(), 0);
  std::vector<std::pair<int, std::string>> stack{{nice.root(), ""}};
  while (!stack.empty()) {
    auto [i, s] = stack.back();
    stack.pop_back();
    const nice_node& node = nice.nodes[i];
    const auto bag = node.bag.to_vector();
    for (std::size_t j = 0; j < bag.size(); ++j) colors[bag[j]] = s[j];
    switch (node.type) {
      case nice_node::kind::leaf: break;
      case nice_node::kind::introduce: {
        std::string t = s;
        t.erase(t.begin() + position_in(node.bag, node.v));
        stack.emplace_back(node.children[0], std::move(t));
        break;
      }
      case nice_node::kind::forget: {
        std::string t = s;
        t.insert(t.begin() + position_in(nice.nodes[node.children[0]].bag, node.v), table[i].at(s));
        stack.emplace_back(node.children[0], std::move(t));
        break;
      }
      case nice_node::kind::join:
        stack.emplace_back(node.children[0], s);
        stack.emplace_back(node.children[1], s);
        break;
    }
  }
  if (auto why = check_list_coloring(g, lists, colors); !why.empty())
    throw std::logic_error("list_coloring_on_td produced an invalid colouring: " + why);
  return colors;
}

std::optional<std::vector<int>> list_coloring_brute(const graph& g, const color_lists& lists,
                                                    std::uint64_t node_limit) {
  check_lists(g, lists);
  search_budget budget(node_limit, "list_coloring_brute");
  const int n = g.order();
  std::vector<int> colors(n, 0);
  std::function<bool(vertex)> go = [&](vertex v) {
    budget.charge();
    if (v == n) return true;
    for (int c = 1; c <= lists.k; ++c) {
      if (!lists.allows(v, c)) continue;
      bool ok = true;
      for (vertex w : g.neighbors(v))
        if (w < v && colors[w] == c) ok = false;
      if (!ok) continue;
      colors[v] = c;
      if (go(v + 1)) return true;
    }
    colors[v] = 0;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return colors;
}

mwis_result mwis_on_td(const weighted_graph& wg, const tree_decomposition& td) {
  const graph& g = wg.graph;
  const nice_tree_decomposition nice = make_nice(g, td);
  struct cell {
    std::int64_t value = 0;
    bool took = false;  // forget nodes: whether the best child state holds v
  };
  std::vector<std::unordered_map<vertex_set, cell, vertex_set_hash>> table(nice.nodes.size());
  for (std::size_t i = 0; i < nice.nodes.size(); ++i) {
    const nice_node& node = nice.nodes[i];
    auto& here = table[i];
    switch (node.type) {
      case nice_node::kind::leaf: here.emplace(vertex_set{}, cell{}); break;
      case nice_node::kind::introduce:
        for (const auto& [s, c] : table[node.children[0]]) {
          here.emplace(s, cell{c.value, false});
          if (!g.neighbors(node.v).intersects(s)) {
            vertex_set t = s;
            t.insert(node.v);
            here.emplace(t, cell{c.value + wg.weights[node.v], false});
          }
        }
        break;
      case nice_node::kind::forget:
        for (const auto& [s, c] : table[node.children[0]]) {
          vertex_set t = s;
          t.erase(node.v);
          const bool took = s.contains(node.v);
          auto [it, fresh] = here.emplace(t, cell{c.value, took});
          if (!fresh && (c.value > it->second.value || (c.value == it->second.value && !took && it->second.took)))
            it->second = cell{c.value, took};
        }
        break;
      case nice_node::kind::join: {
        const auto& right = table[node.children[1]];
        for (const auto& [s, c] : table[node.children[0]])
          if (auto it = right.find(s); it != right.end())
            here.emplace(s, cell{c.value + it->second.value - wg.weight_of(s), false});
        break;
      }
    }
  }
  mwis_result out;
  out.weight = table[nice.root()].at(vertex_set{}).value;
  std::vector<std::pair<int, vertex_set>> stack{{nice.root(), vertex_set{}}};
  while (!stack.empty()) {
    auto [i, s] = stack.back();
    stack.pop_back();
    out.set |= s;
    const nice_node& node = nice.nodes[i];
    switch (node.type) {
      case nice_node::kind::leaf: break;
      case nice_node::kind::introduce: {
        vertex_set t = s;
        t.erase(node.v);
        stack.emplace_back(node.children[0], t);
        break;
      }
      case nice_node::kind::forget: {
        vertex_set t = s;
        if (table[i].at(s).took) t.insert(node.v);
        stack.emplace_back(node.children[0], t);
        break;
      }
      case nice_node::kind::join:
        stack.emplace_back(node.children[0], s);
        stack.emplace_back(node.children[1], s);
        break;
    }
  }
  return out;
}

std::string to_string(robust_outcome::kind k) {
  switch (k) {
    case robust_outcome::kind::colored: return "colored";
    case robust_outcome::kind::not_colorable: return "not_colorable";
    case robust_outcome::kind::not_in_class: return "not_in_class";
    case robust_outcome::kind::refused: return "refused";
  }
  return "?";
}

robust_outcome robust_list_k_coloring(const graph& g, const color_lists& lists, int k,
                                      const binding_function& binding, std::uint64_t node_limit) {
  if (k < 1) throw argument_error("robust_list_k_coloring: k must be positive");
  if (lists.k != k) throw argument_error("robust_list_k_coloring: lists use a different k");
  check_lists(g, lists);
  robust_outcome out;
  out.ceiling = binding.ceiling(k);
  try {
    if (auto clique = find_clique(g, k + 1, g.vertices(), node_limit)) {
      out.result = robust_outcome::kind::not_colorable;
      out.clique = clique;
      out.detail = "graph has a clique of size " + std::to_string(k + 1);
      return out;
    }
    const int cap = static_cast<int>(std::min<std::int64_t>(out.ceiling, g.order()));
    auto order = treewidth_at_most(g, cap, node_limit);
    if (!order) {
      out.result = robust_outcome::kind::not_in_class;
      out.detail = "treewidth exceeds " + std::to_string(out.ceiling);
      return out;
    }
    if (auto colors = list_coloring_on_td(g, lists, decomposition_from_order(g, *order))) {
      out.result = robust_outcome::kind::colored;
      out.coloring = std::move(*colors);
    } else {
      out.result = robust_outcome::kind::not_colorable;
      out.detail = "no colouring respects the lists";
    }
  } catch (const budget_exceeded& e) {
    out.result = robust_outcome::kind::refused;
    out.detail = e.what();
  }
  return out;
}

int clique_lower_bound_from_width(int t, double c, double eps) {
  if (t < 0) throw argument_error("clique_lower_bound_from_width: t must be nonnegative");
  if (!(c >= 1.0) || !(eps > 0.0) || !std::isfinite(c + eps) || c + eps > 1000.0)
    throw argument_error("clique_lower_bound_from_width: need c >= 1, eps > 0 and c + eps <= 1000");
  using boost::multiprecision::cpp_int;
  auto num = static_cast<unsigned>(std::ceil((c + eps) * 1000.0 - 1e-9));
  unsigned den = 1000;
  const unsigned common = std::gcd(num, den);
  num /= common;
  den /= common;
  const cpp_int target = boost::multiprecision::pow(cpp_int(t + 1), den);
  // num >= den, so m = t + 1 always qualifies.
  int lo = 1, hi = t + 1;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    if (boost::multiprecision::pow(cpp_int(mid), num) >= target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

int clique_lower_bound_from_width_log(int t, int base) {
  if (t < 0) throw argument_error("clique_lower_bound_from_width_log: t must be nonnegative");
  if (base < 2) throw argument_error("clique_lower_bound_from_width_log: base must be at least 2");
  int m = 1;
  for (std::int64_t p = base; p < t + 1; p *= base) ++m;
  return m;
}

approx_clique_result approx_clique(const graph& g, const approx_clique_options& opts) {
  approx_clique_result out;
  if (g.order() == 0) return out;
  out.treewidth = treewidth_exact(g, opts.node_limit).value;
  out.omega = clique_number(g, opts.node_limit).value;
  if (opts.shape == approx_clique_options::formula::polynomial) {
    out.lower_bound = clique_lower_bound_from_width(out.treewidth, opts.c, opts.eps);
    out.guarantee = std::pow(static_cast<double>(out.omega), 1.0 - 1.0 / (opts.c + opts.eps));
  } else {
    out.lower_bound = clique_lower_bound_from_width_log(out.treewidth, opts.base);
    const double lg = std::log(static_cast<double>(out.omega));
    out.guarantee = lg > 0 ? out.omega / lg : static_cast<double>(out.omega);
  }
  out.ratio = static_cast<double>(out.omega) / out.lower_bound;
  return out;
}

}  // namespace twomega
