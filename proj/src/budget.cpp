#include "twomega/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace twomega {

std::uint64_t default_node_limit() {
  constexpr std::uint64_t fallback = 10'000'000;
  const char* env = std::getenv("TWOMEGA_BUDGET");
  if (!env || !*env) return fallback;
  std::uint64_t value = 0;
  auto [end, ec] = std::from_chars(env, env + std::strlen(env), value);
  if (ec != std::errc{} || *end != '\0' || value == 0) return fallback;
  return value;
}

}  // namespace twomega
