#include "twomega/containment.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "twomega/invariants.hpp"

namespace twomega {

std::string_view to_string(relation r) {
  switch (r) {
    case relation::subgraph: return "subgraph";
    case relation::induced_subgraph: return "induced_subgraph";
    case relation::topological_minor: return "topological_minor";
    case relation::induced_topological_minor: return "induced_topological_minor";
    case relation::minor: return "minor";
    case relation::induced_minor: return "induced_minor";
  }
  return "?";
}

relation parse_relation(std::string_view name) {
  for (relation r : all_relations)
    if (to_string(r) == name) return r;
  throw argument_error("unknown relation '" + std::string(name) + "'");
}

bool is_induced(relation r) {
  return r == relation::induced_subgraph || r == relation::induced_topological_minor || r == relation::induced_minor;
}

std::string_view to_string(outcome o) {
  switch (o) {
    case outcome::absent: return "false";
    case outcome::found: return "true";
    case outcome::refused: return "refused";
  }
  return "?";
}

namespace {

std::string pair_text(vertex a, vertex b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

/// Pattern vertex classes of twins: x ~ y iff N(x) - y == N(y) - x. Swapping
/// two twins is an automorphism, which the searches use to fix the relative
/// order of their images.
std::vector<int> twin_class(const graph& h) {
  const int n = h.order();
  std::vector<int> cls(n, -1);
  for (vertex x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = x;
    for (vertex y = x + 1; y < n; ++y) {
      if (cls[y] >= 0) continue;
      vertex_set a = h.neighbors(x), b = h.neighbors(y);
      a.erase(y);
      b.erase(x);
      if (a == b) cls[y] = x;
    }
  }
  return cls;
}

/// Pattern order for the searches: repeatedly take the unplaced vertex with
/// the most placed neighbours, then the highest degree, then the smallest
/// index. Twins end up in increasing index order.
std::vector<vertex> search_order(const graph& h) {
  std::vector<vertex> order;
  vertex_set placed;
  for (int step = 0; step < h.order(); ++step) {
    vertex best = -1;
    int best_links = -1, best_deg = -1;
    for (vertex x = 0; x < h.order(); ++x) {
      if (placed.contains(x)) continue;
      int links = (h.neighbors(x) & placed).size();
      if (links > best_links || (links == best_links && h.degree(x) > best_deg)) {
        best = x;
        best_links = links;
        best_deg = h.degree(x);
      }
    }
    order.push_back(best);
    placed.insert(best);
  }
  // Within each twin class the order above may interleave; restore
  // increasing index order among positions held by the same class.
  auto cls = twin_class(h);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (cls[order[i]] == cls[order[j]] && order[j] < order[i]) std::swap(order[i], order[j]);
  return order;
}

// ----------------------------------------------------------- subgraphs

class subgraph_search {
 public:
  subgraph_search(const graph& h, const graph& g, bool induced, std::uint64_t limit)
      : h_(h), g_(g), induced_(induced), budget_(limit, "subgraph search"), order_(search_order(h)),
        cls_(twin_class(h)), map_(h.order(), -1) {}

  std::optional<std::vector<vertex>> run() {
    if (h_.order() > g_.order() || h_.size() > g_.size()) return std::nullopt;
    if (step(0)) return map_;
    return std::nullopt;
  }

 private:
  bool step(std::size_t i) {
    if (i == order_.size()) return true;
    budget_.charge();
    const vertex x = order_[i];
    vertex_set cand = g_.vertices() - used_;
    int floor = -1;
    for (std::size_t j = 0; j < i; ++j) {
      const vertex y = order_[j];
      if (h_.adjacent(x, y))
        cand &= g_.neighbors(map_[y]);
      else if (induced_)
        cand -= g_.neighbors(map_[y]);
      if (cls_[y] == cls_[x]) floor = std::max(floor, map_[y]);
    }
    for (vertex v : cand) {
      if (v <= floor || g_.degree(v) < h_.degree(x)) continue;
      map_[x] = v;
      used_.insert(v);
      if (step(i + 1)) return true;
      used_.erase(v);
    }
    map_[x] = -1;
    return false;
  }

  const graph& h_;
  const graph& g_;
  bool induced_;
  search_budget budget_;
  std::vector<vertex> order_;
  std::vector<int> cls_;
  std::vector<vertex> map_;
  vertex_set used_;
};

// --------------------------------------------------------------- minors

/// Enumerates each connected subset of `avail` whose minimum is `root`
/// exactly once. The visitor returns true to stop.
bool for_each_connected_set(const graph& g, const vertex_set& avail, vertex root,
                            const std::function<bool(const vertex_set&)>& visit) {
  std::function<bool(vertex_set&, vertex_set, vertex_set)> grow = [&](vertex_set& s, vertex_set ext,
                                                                      vertex_set banned) -> bool {
    if (visit(s)) return true;
    while (!ext.empty()) {
      vertex v = ext.first();
      ext.erase(v);
      banned.insert(v);
      s.insert(v);
      vertex_set next_ext = (ext | (g.neighbors(v) & avail)) - s - banned;
      // banned already holds v and every earlier sibling; v itself is in s.
      if (grow(s, next_ext, banned - vertex_set{v})) return true;
      s.erase(v);
    }
    return false;
  };
  vertex_set s{root};
  vertex_set banned = avail & vertex_set::range(root);
  banned.insert(root);
  vertex_set ext = (g.neighbors(root) & avail) - banned;
  return grow(s, ext, banned);
}

/// Number of vertices of g[s] whose removal keeps g[s] connected.
int non_cut_vertices(const graph& g, const vertex_set& s) {
  if (s.size() <= 1) return s.size();
  int count = 0;
  for (vertex v : s) {
    vertex_set rest = s;
    rest.erase(v);
    if (induces_connected(g, rest)) ++count;
  }
  return count;
}

/// Bag-by-bag model search. Bags are restricted to minimal ones: if a vertex
/// of a bag could be dropped keeping the bag connected and touching every
/// neighbouring bag, dropping it keeps the model valid in both modes. In a
/// minimal bag every non-cut vertex is the private contact with some
/// neighbouring bag, so there are at most deg_H(x) of them.
class minor_search {
 public:
  minor_search(const graph& h, const graph& g, bool induced, std::uint64_t limit)
      : h_(h), g_(g), induced_(induced), budget_(limit, "minor search"), order_(search_order(h)),
        cls_(twin_class(h)), bags_(h.order()), assigned_(h.order(), false) {}

  std::optional<minor_model> run() {
    if (h_.order() > g_.order()) return std::nullopt;
    if (!induced_ && h_.size() > g_.size()) return std::nullopt;
    if (step(0)) return minor_model{h_, bags_, induced_};
    return std::nullopt;
  }

 private:
  vertex_set available_for(vertex x) const {
    vertex_set avail = g_.vertices() - used_;
    if (induced_)
      for (vertex z = 0; z < h_.order(); ++z)
        if (assigned_[z] && z != x && !h_.adjacent(x, z)) avail -= bags_[z] | g_.neighbors_of(bags_[z]);
    return avail;
  }

  bool touches(const vertex_set& bag, const vertex_set& other) const {
    return g_.neighbors_of(bag).intersects(other);
  }

  // Every unplaced pattern vertex still has room: some component of its
  // available region touches all its placed neighbours.
  bool feasible(std::size_t next) const {
    int free_needed = static_cast<int>(order_.size() - next);
    if ((g_.vertices() - used_).size() < free_needed) return false;
    for (std::size_t j = next; j < order_.size(); ++j) {
      const vertex x = order_[j];
      vertex_set avail = available_for(x);
      if (avail.empty()) return false;
      std::vector<vertex_set> need;
      for (vertex y = 0; y < h_.order(); ++y)
        if (assigned_[y] && h_.adjacent(x, y)) need.push_back(bags_[y]);
      if (need.empty()) continue;
      bool ok = false;
      vertex_set touch_first = avail & g_.neighbors_of(need[0]);
      for (const auto& comp : components_within(g_, avail)) {
        if (!comp.intersects(touch_first)) continue;
        vertex_set around = g_.neighbors_of(comp);
        if (std::all_of(need.begin(), need.end(), [&](const vertex_set& b) { return around.intersects(b); })) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool step(std::size_t i) {
    if (i == order_.size()) return true;
    budget_.charge();
    const vertex x = order_[i];
    const vertex_set avail = available_for(x);
    int floor = -1;
    std::vector<vertex> placed_neighbours;
    for (std::size_t j = 0; j < i; ++j) {
      const vertex y = order_[j];
      if (cls_[y] == cls_[x]) floor = std::max(floor, bags_[y].first());
      if (h_.adjacent(x, y)) placed_neighbours.push_back(y);
    }
    const int max_leaves = std::max(1, h_.degree(x));
    for (vertex root : avail) {
      if (root <= floor) continue;
      bool stop = for_each_connected_set(g_, avail, root, [&](const vertex_set& bag) {
        budget_.charge();
        for (vertex y : placed_neighbours)
          if (!touches(bag, bags_[y])) return false;
        if (non_cut_vertices(g_, bag) > max_leaves) return false;
        bags_[x] = bag;
        assigned_[x] = true;
        used_ |= bag;
        if (feasible(i + 1) && step(i + 1)) return true;
        used_ -= bag;
        assigned_[x] = false;
        bags_[x].clear();
        return false;
      });
      if (stop) return true;
    }
    return false;
  }

  const graph& h_;
  const graph& g_;
  bool induced_;
  search_budget budget_;
  std::vector<vertex> order_;
  std::vector<int> cls_;
  std::vector<vertex_set> bags_;
  std::vector<bool> assigned_;
  vertex_set used_;
};

// ---------------------------------------------------------- subdivisions

/// Branch vertices first, then one chordless path per pattern edge.
/// Chordless paths suffice in the plain case (a chord shortcuts the path)
/// and are forced in the induced case.
class subdivision_search {
 public:
  subdivision_search(const graph& h, const graph& g, bool induced, std::uint64_t limit)
      : h_(h), g_(g), induced_(induced), budget_(limit, "topological minor search"), order_(search_order(h)),
        cls_(twin_class(h)), branch_(h.order(), -1), edges_(h.edges()), paths_(edges_.size()) {}

  std::optional<subdivision_model> run() {
    if (h_.order() > g_.order()) return std::nullopt;
    if (place(0)) {
      subdivision_model s{h_, branch_, {}, induced_};
      for (std::size_t e = 0; e < edges_.size(); ++e) s.paths.push_back(paths_[e]);
      return s;
    }
    return std::nullopt;
  }

 private:
  bool place(std::size_t i) {
    if (i == order_.size()) {
      // Route edges whose images are adjacent directly first: in the plain
      // case this never hurts, in the induced case it is forced.
      std::vector<std::size_t> pending;
      for (std::size_t e = 0; e < edges_.size(); ++e) {
        vertex a = branch_[edges_[e].first], b = branch_[edges_[e].second];
        if (g_.adjacent(a, b))
          paths_[e] = {a, b};
        else
          pending.push_back(e);
      }
      std::stable_sort(pending.begin(), pending.end(), [&](std::size_t p, std::size_t q) {
        return distance_hint(p) < distance_hint(q);
      });
      pending_ = std::move(pending);
      return route(0);
    }
    budget_.charge();
    const vertex x = order_[i];
    int floor = -1;
    vertex_set cand = g_.vertices() - branch_set_;
    for (std::size_t j = 0; j < i; ++j) {
      const vertex y = order_[j];
      if (cls_[y] == cls_[x]) floor = std::max(floor, branch_[y]);
      if (induced_ && !h_.adjacent(x, y)) cand -= g_.neighbors(branch_[y]);
    }
    for (vertex v : cand) {
      if (v <= floor || g_.degree(v) < h_.degree(x)) continue;
      branch_[x] = v;
      branch_set_.insert(v);
      if (place(i + 1)) return true;
      branch_set_.erase(v);
    }
    branch_[x] = -1;
    return false;
  }

  int distance_hint(std::size_t e) const {
    vertex a = branch_[edges_[e].first], b = branch_[edges_[e].second];
    vertex_set seen{a}, frontier{a};
    vertex_set open = g_.vertices() - branch_set_;
    for (int d = 1; !frontier.empty(); ++d) {
      vertex_set next;
      for (vertex v : frontier) next |= g_.neighbors(v);
      if (next.contains(b)) return d;
      next &= open;
      next -= seen;
      seen |= next;
      frontier = next;
    }
    return 1 << 20;
  }

  // Vertices an interior vertex may use: not a branch vertex, not on a path,
  // and in the induced case not adjacent to any used vertex.
  vertex_set free_interior() const {
    vertex_set f = g_.vertices() - branch_set_ - interior_;
    if (induced_) f -= g_.neighbors_of(interior_);
    return f;
  }

  bool still_routable(std::size_t k) const {
    const vertex_set f = free_interior();
    for (std::size_t p = k; p < pending_.size(); ++p) {
      const auto [u, w] = edges_[pending_[p]];
      vertex a = branch_[u], b = branch_[w];
      vertex_set start = g_.neighbors(a) & f;
      if (induced_) start -= g_.neighbors_of(branch_set_ - vertex_set{a, b});
      bool ok = false;
      for (const auto& comp : components_within(g_, f))
        if (comp.intersects(start) && g_.neighbors_of(comp).contains(b)) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  }

  bool route(std::size_t k) {
    if (k == pending_.size()) return true;
    budget_.charge();
    if (!still_routable(k)) return false;
    const std::size_t e = pending_[k];
    const vertex a = branch_[edges_[e].first], b = branch_[edges_[e].second];
    vertex_set allowed = free_interior();
    if (induced_) allowed -= g_.neighbors_of(branch_set_ - vertex_set{a, b});
    // Shortest first: raise the length bound until the full range is tried.
    const int max_len = allowed.size() + 1;
    for (int len = 2; len <= max_len; ++len) {
      std::vector<vertex> path{a};
      vertex_set on_path{a};
      if (extend(k, e, b, allowed, len, path, on_path)) return true;
    }
    return false;
  }

  bool extend(std::size_t k, std::size_t e, vertex b, const vertex_set& allowed, int len, std::vector<vertex>& path,
              vertex_set& on_path) {
    budget_.charge();
    const vertex last = path.back();
    const int edges_so_far = static_cast<int>(path.size()) - 1;
    if (edges_so_far == len - 1) {
      if (!g_.adjacent(last, b)) return false;
      // Chordless: b touches only the last interior vertex.
      vertex_set inner = on_path;
      inner.erase(path.front());
      inner.erase(last);
      if (g_.neighbors(b).intersects(inner)) return false;
      path.push_back(b);
      paths_[e] = path;
      vertex_set added = on_path;
      added.erase(path.front());
      interior_ |= added;
      if (route(k + 1)) return true;
      interior_ -= added;
      path.pop_back();
      return false;
    }
    vertex_set earlier = on_path;
    earlier.erase(last);
    vertex_set next = g_.neighbors(last) & allowed;
    next -= on_path;
    for (vertex w : next) {
      if (g_.neighbors(w).intersects(earlier)) continue;  // chord
      if (edges_so_far + 1 < len - 1 && g_.adjacent(w, b)) continue;  // would close early with a chord
      path.push_back(w);
      on_path.insert(w);
      if (extend(k, e, b, allowed, len, path, on_path)) return true;
      on_path.erase(w);
      path.pop_back();
    }
    return false;
  }

  const graph& h_;
  const graph& g_;
  bool induced_;
  search_budget budget_;
  std::vector<vertex> order_;
  std::vector<int> cls_;
  std::vector<vertex> branch_;
  vertex_set branch_set_;
  std::vector<edge> edges_;
  std::vector<std::vector<vertex>> paths_;
  std::vector<std::size_t> pending_;
  vertex_set interior_;
};

}  // namespace

// -------------------------------------------------------------- checkers

std::string check_embedding(const graph& h, const graph& g, const std::vector<vertex>& map, bool induced) {
  if (static_cast<int>(map.size()) != h.order()) return "map has wrong length";
  vertex_set image;
  for (vertex v : map) {
    if (v < 0 || v >= g.order()) return "image vertex out of range";
    if (image.contains(v)) return "map is not injective";
    image.insert(v);
  }
  for (vertex x = 0; x < h.order(); ++x)
    for (vertex y = x + 1; y < h.order(); ++y) {
      bool want = h.adjacent(x, y), have = g.adjacent(map[x], map[y]);
      if (want && !have) return "pattern edge " + pair_text(x, y) + " not mapped to an edge";
      if (induced && !want && have) return "pattern non-edge " + pair_text(x, y) + " mapped to an edge";
    }
  return {};
}

std::string check_minor_model(const graph& g, const minor_model& m) {
  const graph& h = m.pattern;
  if (static_cast<int>(m.bags.size()) != h.order()) return "bag count differs from pattern order";
  vertex_set seen;
  for (vertex x = 0; x < h.order(); ++x) {
    const auto& bag = m.bags[x];
    if (bag.empty()) return "bag " + std::to_string(x) + " is empty";
    if (!bag.is_subset_of(g.vertices())) return "bag " + std::to_string(x) + " leaves the host";
    if (bag.intersects(seen)) return "bag " + std::to_string(x) + " overlaps an earlier bag";
    if (!induces_connected(g, bag)) return "bag " + std::to_string(x) + " is disconnected";
    seen |= bag;
  }
  for (vertex x = 0; x < h.order(); ++x)
    for (vertex y = x + 1; y < h.order(); ++y) {
      bool touch = g.neighbors_of(m.bags[x]).intersects(m.bags[y]);
      if (h.adjacent(x, y) && !touch) return "bags of pattern edge " + pair_text(x, y) + " are not adjacent";
      if (m.induced && !h.adjacent(x, y) && touch)
        return "bags of pattern non-edge " + pair_text(x, y) + " are adjacent";
    }
  return {};
}

std::string check_subdivision(const graph& g, const subdivision_model& s) {
  const graph& h = s.pattern;
  if (static_cast<int>(s.branch.size()) != h.order()) return "branch map has wrong length";
  auto es = h.edges();
  if (s.paths.size() != es.size()) return "path count differs from pattern size";
  vertex_set used;
  for (vertex v : s.branch) {
    if (v < 0 || v >= g.order() || used.contains(v)) return "branch map is not an injection into the host";
    used.insert(v);
  }
  for (std::size_t e = 0; e < es.size(); ++e) {
    const auto& p = s.paths[e];
    if (p.size() < 2 || p.front() != s.branch[es[e].first] || p.back() != s.branch[es[e].second])
      return "path " + std::to_string(e) + " does not join the branch vertices of " + pair_text(es[e].first, es[e].second);
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] < 0 || p[i] >= g.order() || p[i + 1] < 0 || p[i + 1] >= g.order() || !g.adjacent(p[i], p[i + 1]))
        return "path " + std::to_string(e) + " uses a non-edge";
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if (used.contains(p[i])) return "path " + std::to_string(e) + " reuses vertex " + std::to_string(p[i]);
      used.insert(p[i]);
    }
  }
  if (s.induced) {
    // The used vertices must induce exactly the subdivision.
    graph expected(g.order());
    for (const auto& p : s.paths)
      for (std::size_t i = 0; i + 1 < p.size(); ++i) expected.add_edge(p[i], p[i + 1]);
    for (vertex a : used)
      for (vertex b : used)
        if (a < b && g.adjacent(a, b) != expected.adjacent(a, b))
          return "host edge " + pair_text(a, b) + " is a chord of the subdivision";
  }
  return {};
}

// --------------------------------------------------------------- searches

std::optional<std::vector<vertex>> find_subgraph(const graph& h, const graph& g, bool induced, std::uint64_t limit) {
  return subgraph_search(h, g, induced, limit).run();
}

std::optional<minor_model> find_minor_model(const graph& h, const graph& g, bool induced, std::uint64_t limit) {
  return minor_search(h, g, induced, limit).run();
}

std::optional<subdivision_model> find_subdivision(const graph& h, const graph& g, bool induced, std::uint64_t limit) {
  return subdivision_search(h, g, induced, limit).run();
}

namespace {

[[noreturn]] void witness_failed(relation rel, const std::string& why) {
  throw std::logic_error("containment witness for " + std::string(to_string(rel)) + " failed revalidation: " + why);
}

}  // namespace

containment_result contains(const graph& h, const graph& g, relation rel, std::uint64_t limit) {
  containment_result res;
  try {
    switch (rel) {
      case relation::subgraph:
      case relation::induced_subgraph: {
        bool induced = rel == relation::induced_subgraph;
        res.embedding = find_subgraph(h, g, induced, limit);
        if (res.embedding) {
          if (auto why = check_embedding(h, g, *res.embedding, induced); !why.empty()) witness_failed(rel, why);
          res.result = outcome::found;
        }
        break;
      }
      case relation::topological_minor:
      case relation::induced_topological_minor: {
        res.subdivision = find_subdivision(h, g, rel == relation::induced_topological_minor, limit);
        if (res.subdivision) {
          if (auto why = check_subdivision(g, *res.subdivision); !why.empty()) witness_failed(rel, why);
          res.result = outcome::found;
        }
        break;
      }
      case relation::minor:
      case relation::induced_minor: {
        res.model = find_minor_model(h, g, rel == relation::induced_minor, limit);
        if (res.model) {
          if (auto why = check_minor_model(g, *res.model); !why.empty()) witness_failed(rel, why);
          res.result = outcome::found;
        }
        break;
      }
    }
  } catch (const budget_exceeded& e) {
    res = {};
    res.result = outcome::refused;
    res.refusal = e.what();
  }
  return res;
}

containment_result contains_topological(const graph& h, const graph& g, bool induced, std::uint64_t limit) {
  return contains(h, g, induced ? relation::induced_topological_minor : relation::topological_minor, limit);
}

implication_report relation_implication_check(const graph& h, const graph& g, std::uint64_t limit) {
  implication_report rep;
  for (relation r : all_relations) rep.results[static_cast<int>(r)] = contains(h, g, r, limit).result;
  auto implies = [&](relation a, relation b) {
    if (rep.at(a) == outcome::found && rep.at(b) == outcome::absent)
      rep.violations.push_back(std::string(to_string(a)) + " holds but " + std::string(to_string(b)) + " does not");
  };
  implies(relation::subgraph, relation::topological_minor);
  implies(relation::topological_minor, relation::minor);
  implies(relation::induced_subgraph, relation::induced_topological_minor);
  implies(relation::induced_topological_minor, relation::induced_minor);
  implies(relation::induced_subgraph, relation::subgraph);
  implies(relation::induced_topological_minor, relation::topological_minor);
  implies(relation::induced_minor, relation::minor);
  return rep;
}

int hadwiger_number(const graph& g, std::uint64_t node_limit) {
  if (g.order() == 0) return 0;
  int eta = clique_number(g, node_limit).value;
  for (int p = eta + 1; p <= g.order() && p * (p - 1) / 2 <= g.size(); ++p) {
    graph kp(p);
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b) kp.add_edge(a, b);
    if (!find_minor_model(kp, g, false, node_limit)) break;
    eta = p;
  }
  return eta;
}

}  // namespace twomega
