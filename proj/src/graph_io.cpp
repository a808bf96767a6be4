#include "twomega/graph_io.hpp"

#include <cctype>
#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

namespace twomega {

namespace {

constexpr std::string_view graph6_header = ">>graph6<<";

std::string_view trim_right(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, graph6_header.size()) == graph6_header) base = graph6_header.size();
  std::string_view body = trim_right(text.substr(base));
  if (body.empty()) throw parse_error("graph6: empty input", base);

  auto value_at = [&](std::size_t i) {
    unsigned char c = static_cast<unsigned char>(body[i]);
    if (c < 63 || c > 126) throw parse_error("graph6: character outside [63, 126]", base + i);
    return static_cast<int>(c) - 63;
  };

  int n = value_at(0);
  if (n == 63) throw parse_error("graph6: long-form header (n > 62) is not supported", base);

  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t chunks = (bits + 5) / 6;
  if (body.size() < 1 + chunks) throw parse_error("graph6: truncated bit stream", base + body.size());
  if (body.size() > 1 + chunks) throw parse_error("graph6: trailing characters", base + 1 + chunks);

  graph g(n);
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      int chunk = value_at(1 + k / 6);
      if (chunk & (1 << (5 - k % 6))) g.add_edge(u, v);
    }
  if (bits % 6 != 0) {
    int last = value_at(chunks);
    int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) throw parse_error("graph6: nonzero padding bits", base + chunks);
  }
  return g;
}

std::string emit_graph6(const graph& g) {
  const int n = g.order();
  if (n > 62) throw argument_error("graph6 short form supports at most 62 vertices, got " + std::to_string(n));
  std::string out(1, static_cast<char>(63 + n));
  int acc = 0, filled = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

graph parse_edge_list(std::string_view text) {
  std::size_t pos = 0;
  auto next_int = [&](const char* what) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) throw parse_error(std::string("edge list: missing ") + what, pos);
    long long value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{} || value < 0)
      throw parse_error(std::string("edge list: expected nonnegative integer for ") + what, pos);
    std::size_t at = pos;
    pos = static_cast<std::size_t>(end - text.data());
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw parse_error(std::string("edge list: malformed ") + what, at);
    return std::pair{value, at};
  };

  auto [n, n_at] = next_int("vertex count");
  if (n > vertex_set::capacity) throw parse_error("edge list: too many vertices", n_at);
  auto [m, m_at] = next_int("edge count");
  graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    auto [u, u_at] = next_int("edge endpoint");
    auto [v, v_at] = next_int("edge endpoint");
    if (u >= n) throw parse_error("edge list: endpoint out of range", u_at);
    if (v >= n) throw parse_error("edge list: endpoint out of range", v_at);
    if (u == v) throw parse_error("edge list: self-loop", u_at);
    if (g.adjacent(static_cast<int>(u), static_cast<int>(v))) throw parse_error("edge list: duplicate edge", u_at);
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw parse_error("edge list: trailing data", pos);
  return g;
}

std::string emit_edge_list(const graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size();
  for (auto [u, v] : g.edges()) out << ' ' << u << ' ' << v;
  return out.str();
}

std::string emit_compact(const graph& g) { return g.order() <= 62 ? emit_graph6(g) : emit_edge_list(g); }

namespace {

struct fraction {
  std::int64_t num;
  std::int64_t den;
};

fraction parse_fraction(const std::string& tok, std::size_t index) {
  auto fail = [&]() -> fraction { throw parse_error("weight: cannot parse '" + tok + "'", index); };
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  auto to_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) fail();
    return v;
  };
  std::string_view s = tok;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto a = s.substr(0, slash), b = s.substr(slash + 1);
    if (!digits(a) || !digits(b)) return fail();
    std::int64_t den = to_int(b);
    if (den == 0) return fail();
    return {to_int(a), den};
  }
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto a = s.substr(0, dot), b = s.substr(dot + 1);
    if ((!a.empty() && !digits(a)) || !digits(b) || b.size() > 15) return fail();
    std::int64_t den = 1;
    for (std::size_t i = 0; i < b.size(); ++i) den *= 10;
    std::int64_t whole = a.empty() ? 0 : to_int(a);
    return {whole * den + to_int(b), den};
  }
  if (!digits(s)) return fail();
  return {to_int(s), 1};
}

}  // namespace

std::vector<std::int64_t> parse_rational_weights(const std::vector<std::string>& tokens, std::int64_t* scale) {
  std::vector<fraction> fs;
  std::int64_t lcm = 1;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    fraction f = parse_fraction(tokens[i], i);
    std::int64_t g = std::gcd(f.num, f.den);
    if (g > 1) f = {f.num / g, f.den / g};
    lcm = std::lcm(lcm, f.den);
    if (lcm > (std::int64_t{1} << 40)) throw parse_error("weight: denominators too large to scale exactly", i);
    fs.push_back(f);
  }
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    std::int64_t factor = lcm / fs[i].den;
    if (fs[i].num > std::numeric_limits<std::int64_t>::max() / factor)
      throw parse_error("weight: scaled value overflows", i);
    out.push_back(fs[i].num * factor);
  }
  if (scale) *scale = lcm;
  return out;
}

}  // namespace twomega
