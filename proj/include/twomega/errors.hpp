#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace twomega {

/// Precondition or argument violation (bad vertex index, missing edge, ...).
class argument_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. Carries the byte offset of the offending input.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// An exact search gave up because it hit its node limit. This is a refusal,
/// never an answer: callers must not read it as "false".
class budget_exceeded : public std::runtime_error {
 public:
  budget_exceeded(const std::string& what, std::uint64_t limit)
      : std::runtime_error(what + ": search budget of " + std::to_string(limit) + " nodes exceeded"),
        limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

}  // namespace twomega
