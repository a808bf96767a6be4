#include "twomega/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace twomega {

graph relabel(const graph& g, const std::vector<vertex>& perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw argument_error("relabel: permutation has wrong length");
  graph h(g.order());
  for (auto [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

namespace {

using code = std::vector<std::uint64_t>;

class canonizer {
 public:
  explicit canonizer(const graph& g) : g_(g), n_(g.order()) {}

  std::vector<vertex> run() {
    std::vector<int> colors(n_, 0);
    search(colors);
    return best_perm_;
  }

 private:
  // Splits cells by (colour, neighbour counts per colour) until stable.
  // Cells keep their relative order, so the result depends only on the
  // isomorphism type of (g, initial colouring).
  void refine(std::vector<int>& colors) const {
    int cells = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
    std::vector<std::vector<int>> keys(n_);
    std::vector<int> order(n_);
    while (true) {
      std::vector<vertex_set> cell_sets(cells);
      for (vertex v = 0; v < n_; ++v) cell_sets[colors[v]].insert(v);
      for (vertex v = 0; v < n_; ++v) {
        auto& k = keys[v];
        k.assign(cells + 1, 0);
        k[0] = colors[v];
        for (int c = 0; c < cells; ++c) k[c + 1] = (g_.neighbors(v) & cell_sets[c]).size();
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(), [&](int a, int b) { return keys[a] < keys[b]; });
      int next_cells = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && keys[order[i]] != keys[order[i - 1]]) ++next_cells;
        colors[order[i]] = next_cells;
      }
      next_cells = n_ == 0 ? 0 : next_cells + 1;
      if (next_cells == cells) return;
      cells = next_cells;
    }
  }

  code leaf_code(const std::vector<int>& perm) const {
    const std::size_t bits = static_cast<std::size_t>(n_) * (n_ > 0 ? n_ - 1 : 0) / 2;
    code c((bits + 63) / 64, 0);
    std::vector<vertex> inverse(n_);
    for (vertex v = 0; v < n_; ++v) inverse[perm[v]] = v;
    std::size_t k = 0;
    for (int j = 1; j < n_; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (g_.adjacent(inverse[i], inverse[j])) c[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    return c;
  }

  void search(std::vector<int> colors) {
    refine(colors);
    std::vector<int> size(n_, 0);
    for (int c : colors) ++size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (size[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      code c = leaf_code(colors);
      if (!have_best_ || c < best_code_) {
        best_code_ = std::move(c);
        best_perm_ = colors;
        have_best_ = true;
      }
      return;
    }
    // Swapping two twins fixes every other vertex and preserves the current
    // colouring, so one branch per twin class covers the cell.
    vertex_set cell;
    for (vertex v = 0; v < n_; ++v)
      if (colors[v] == target) cell.insert(v);
    vertex_set covered;
    for (vertex v : cell) {
      if (covered.contains(v)) continue;
      for (vertex w : cell) {
        vertex_set nv = g_.neighbors(v), nw = g_.neighbors(w);
        nv.erase(w);
        nw.erase(v);
        if (nv == nw) covered.insert(w);
      }
      std::vector<int> child(n_);
      for (vertex u = 0; u < n_; ++u) child[u] = 2 * colors[u] + ((colors[u] == target && u != v) ? 1 : 0);
      search(std::move(child));
    }
  }

  const graph& g_;
  int n_;
  bool have_best_ = false;
  code best_code_;
  std::vector<vertex> best_perm_;
};

}  // namespace

std::vector<vertex> canonical_labeling(const graph& g) { return canonizer(g).run(); }

graph canonical_form(const graph& g) { return relabel(g, canonical_labeling(g)); }

bool isomorphic(const graph& a, const graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::uint64_t pack_small(const graph& g) {
  if (g.order() > 11) throw argument_error("pack_small: order above 11");
  std::uint64_t code = 0;
  int k = 0;
  for (int v = 1; v < g.order(); ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (g.adjacent(u, v)) code |= std::uint64_t{1} << k;
  return code;
}

graph unpack_small(std::uint64_t code, int n) {
  if (n < 0 || n > 11) throw argument_error("unpack_small: order outside [0, 11]");
  graph g(n);
  int k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k)
      if (code >> k & 1) g.add_edge(u, v);
  return g;
}

}  // namespace twomega
