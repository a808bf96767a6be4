#include "twomega/binding.hpp"

#include <algorithm>
#include <charconv>
#include <vector>

#include "twomega/errors.hpp"
#include "twomega/invariants.hpp"

namespace twomega {

binding_function binding_function::linear(int offset) {
  binding_function f;
  f.type = kind::linear_max;
  f.offset = offset;
  return f;
}

binding_function binding_function::max_with(int offset, int constant) {
  binding_function f;
  f.type = kind::max_with_constant;
  f.offset = offset;
  f.constant = constant;
  return f;
}

binding_function binding_function::ramsey(int t) {
  if (t < 1) throw argument_error("ramsey binding needs t >= 1");
  binding_function f;
  f.type = kind::ramsey_based;
  f.t = t;
  return f;
}

binding_function binding_function::skodinis(int q) {
  if (q < 1) throw argument_error("skodinis binding needs q >= 1");
  binding_function f;
  f.type = kind::skodinis_ramsey;
  f.q = q;
  return f;
}

binding_function binding_function::fixed(int c) {
  binding_function f;
  f.type = kind::constant;
  f.constant = c;
  return f;
}

binding_function binding_function::unknown_constant() {
  binding_function f;
  f.type = kind::constant;
  f.explicit_value = false;
  return f;
}

binding_function binding_function::hadwiger_plus(int c) {
  binding_function f;
  f.type = kind::hadwiger_k_plus_c;
  f.constant = c;
  return f;
}

binding_function binding_function::hadwiger_max_of(int p) {
  binding_function f;
  f.type = kind::hadwiger_max;
  f.p = p;
  return f;
}

std::int64_t binding_function::operator()(int k) const {
  if (!explicit_value) throw argument_error("binding function has no explicit value");
  if (k < 1) throw argument_error("binding functions are evaluated at k >= 1");
  std::int64_t v = 0;
  switch (type) {
    case kind::linear_max: v = k + offset; break;
    case kind::max_with_constant: v = std::max<std::int64_t>(k + offset, constant); break;
    case kind::ramsey_based: v = ramsey_upper(k + 1, t) - 2; break;
    case kind::skodinis_ramsey: v = std::max<std::int64_t>(k, 2 * ramsey_upper(k + 1, q) - 2) - 1; break;
    case kind::constant: v = constant; break;
    case kind::hadwiger_k_plus_c: v = k + constant; break;
    case kind::hadwiger_max: v = std::max<std::int64_t>(2 * p - 4, k); break;
  }
  return std::max<std::int64_t>(v, 0);
}

std::int64_t binding_function::ceiling(int k) const {
  std::int64_t best = 0;
  for (int i = 1; i <= k; ++i) best = std::max(best, (*this)(i));
  return best;
}

namespace {

std::string signed_term(int offset) {
  if (offset == 0) return "k";
  return offset > 0 ? "k+" + std::to_string(offset) : "k" + std::to_string(offset);
}

}  // namespace

std::string binding_function::formula() const {
  if (!explicit_value) return "exists, non-explicit";
  switch (type) {
    case kind::linear_max: return signed_term(offset);
    case kind::max_with_constant: return "max(" + signed_term(offset) + ", " + std::to_string(constant) + ")";
    case kind::ramsey_based: return "R(k+1, " + std::to_string(t) + ")-2";
    case kind::skodinis_ramsey: return "max(k, 2R(k+1, " + std::to_string(q) + ")-2)-1";
    case kind::constant: return std::to_string(constant);
    case kind::hadwiger_k_plus_c: return signed_term(constant);
    case kind::hadwiger_max: return "max(" + std::to_string(2 * p - 4) + ", k)";
  }
  return "?";
}

std::string binding_function::kind_name() const {
  switch (type) {
    case kind::linear_max: return "linear_max";
    case kind::max_with_constant: return "max_with_constant";
    case kind::ramsey_based: return "ramsey_based";
    case kind::skodinis_ramsey: return "skodinis_ramsey";
    case kind::constant: return "constant";
    case kind::hadwiger_k_plus_c: return "hadwiger_k_plus_c";
    case kind::hadwiger_max: return "hadwiger_max";
  }
  return "?";
}

binding_function parse_binding(const std::string& name) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto colon = name.find(':', start);
    parts.push_back(name.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  auto num = [&](std::size_t i) {
    if (i >= parts.size()) throw argument_error("binding '" + name + "' is missing a parameter");
    int v = 0;
    const auto& s = parts[i];
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw argument_error("binding '" + name + "' has a bad parameter");
    return v;
  };
  const auto& head = parts[0];
  if (head == "block_cactus") return binding_function::max_with(-1, 2);
  if (head == "chordal" || head == "p3_free") return binding_function::linear(-1);
  if (head == "k2q_im_free" || head == "skodinis") return binding_function::skodinis(num(1));
  if (head == "edgeless_free" || head == "ramsey") return binding_function::ramsey(num(1));
  if (head == "linear") return binding_function::linear(num(1));
  if (head == "max") return binding_function::max_with(num(1), num(2));
  if (head == "constant") return binding_function::fixed(num(1));
  throw argument_error("unknown binding '" + name + "'");
}

}  // namespace twomega
