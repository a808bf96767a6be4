#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace twomega {

using vertex = int;

/// Fixed-capacity bitset over vertex indices [0, 256).
///
/// Every exponential kernel in the library is dominated by neighbourhood
/// intersections, so sets are plain words rather than node-based containers.
/// Iteration is always in ascending vertex order.
class vertex_set {
 public:
  static constexpr int capacity = 256;
  static constexpr int word_count = capacity / 64;

  constexpr vertex_set() = default;
  vertex_set(std::initializer_list<vertex> vs) {
    for (vertex v : vs) insert(v);
  }

  static vertex_set range(int n) {
    vertex_set s;
    for (int w = 0; w < word_count && n > 0; ++w, n -= 64)
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    return s;
  }

  template <typename Range>
  static vertex_set from(const Range& r) {
    vertex_set s;
    for (vertex v : r) s.insert(v);
    return s;
  }

  void insert(vertex v) { words_[v >> 6] |= bit(v); }
  void erase(vertex v) { words_[v >> 6] &= ~bit(v); }
  bool contains(vertex v) const { return (words_[v >> 6] & bit(v)) != 0; }
  void clear() { words_ = {}; }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool intersects(const vertex_set& o) const {
    for (int i = 0; i < word_count; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  bool is_subset_of(const vertex_set& o) const {
    for (int i = 0; i < word_count; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Smallest element, or -1 when empty.
  vertex first() const {
    for (int i = 0; i < word_count; ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return -1;
  }
  /// Smallest element strictly greater than v, or -1.
  vertex next(vertex v) const {
    ++v;
    if (v >= capacity) return -1;
    int i = v >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w) return i * 64 + std::countr_zero(w);
      if (++i == word_count) return -1;
      w = words_[i];
    }
  }

  vertex_set& operator|=(const vertex_set& o) {
    for (int i = 0; i < word_count; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  vertex_set& operator&=(const vertex_set& o) {
    for (int i = 0; i < word_count; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  vertex_set& operator-=(const vertex_set& o) {
    for (int i = 0; i < word_count; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend vertex_set operator|(vertex_set a, const vertex_set& b) { return a |= b; }
  friend vertex_set operator&(vertex_set a, const vertex_set& b) { return a &= b; }
  friend vertex_set operator-(vertex_set a, const vertex_set& b) { return a -= b; }

  friend bool operator==(const vertex_set&, const vertex_set&) = default;
  /// Lexicographic order on the sorted element lists.
  friend bool operator<(const vertex_set& a, const vertex_set& b) {
    vertex x = a.first(), y = b.first();
    while (x >= 0 && y >= 0) {
      if (x != y) return x < y;
      x = a.next(x);
      y = b.next(y);
    }
    return x < 0 && y >= 0;
  }

  /// Raw words, least significant vertex first. Useful as a cheap total order.
  const std::array<std::uint64_t, word_count>& words() const { return words_; }

  std::vector<vertex> to_vector() const {
    std::vector<vertex> out;
    out.reserve(size());
    for (vertex v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const vertex*;
    using reference = vertex;

    iterator() = default;
    iterator(const vertex_set* s, vertex v) : set_(s), v_(v) {}
    vertex operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      auto t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.v_ == b.v_; }

   private:
    const vertex_set* set_ = nullptr;
    vertex v_ = -1;
  };
  iterator begin() const { return {this, first()}; }
  iterator end() const { return {this, -1}; }

 private:
  static constexpr std::uint64_t bit(vertex v) { return std::uint64_t{1} << (v & 63); }
  std::array<std::uint64_t, word_count> words_{};
};

struct vertex_set_hash {
  std::size_t operator()(const vertex_set& s) const { return s.hash(); }
};

}  // namespace twomega
