#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twomega/graph.hpp"

namespace twomega {

/// Short-form graph6 (n <= 62). An optional ">>graph6<<" header and
/// trailing whitespace are accepted on input.
graph parse_graph6(std::string_view text);
std::string emit_graph6(const graph& g);

/// "n m" followed by m pairs "u v", 0-indexed, whitespace separated.
graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const graph& g);

/// graph6 when it fits, edge list (single line) otherwise.
std::string emit_compact(const graph& g);

/// Decimal ("2.5") or fraction ("5/2") weights, one per entry, scaled by the
/// least common multiple of their denominators so the result is integral.
/// Returns the scaled integers; scale receives the common factor.
std::vector<std::int64_t> parse_rational_weights(const std::vector<std::string>& tokens,
                                                 std::int64_t* scale = nullptr);

}  // namespace twomega
