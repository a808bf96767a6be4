#pragma once

#include <cstdint>
#include <string>

#include "twomega/errors.hpp"

namespace twomega {

/// Default node limit for exhaustive searches. 10^7 unless the
/// TWOMEGA_BUDGET environment variable holds a positive integer.
std::uint64_t default_node_limit();

/// Per-call node counter. Each exponential search owns one; there is no
/// global state.
class search_budget {
 public:
  explicit search_budget(std::uint64_t limit = default_node_limit(), std::string label = "search")
      : limit_(limit), label_(std::move(label)) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) throw budget_exceeded(label_, limit_);
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  std::string label_;
};

}  // namespace twomega
