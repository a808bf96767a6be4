#pragma once

#include <cstdint>
#include <string>

namespace twomega {

/// Symbolic binding function f, evaluated at clique number k >= 1.
///
///   linear_max         max(k + offset, 0)
///   max_with_constant  max(k + offset, constant)
///   ramsey_based       ramsey_upper(k + 1, t) - 2
///   skodinis_ramsey    max(k, 2 * ramsey_upper(k + 1, q) - 2) - 1
///   constant           constant (possibly unknown: explicit == false)
///   hadwiger_k_plus_c  k + constant              (bounds eta, not tw)
///   hadwiger_max       max(2p - 4, k)            (bounds eta, not tw)
///
/// Results are clamped at 0. A non-explicit function records that a bound
/// exists without a known value; evaluating it throws.
struct binding_function {
  enum class kind { linear_max, max_with_constant, ramsey_based, skodinis_ramsey, constant, hadwiger_k_plus_c, hadwiger_max };

  kind type = kind::constant;
  int offset = 0;
  int constant = 0;
  int t = 0;
  int q = 0;
  int p = 0;
  bool explicit_value = true;

  static binding_function linear(int offset);
  static binding_function max_with(int offset, int constant);
  static binding_function ramsey(int t);
  static binding_function skodinis(int q);
  static binding_function fixed(int c);
  static binding_function unknown_constant();
  static binding_function hadwiger_plus(int c);
  static binding_function hadwiger_max_of(int p);

  std::int64_t operator()(int k) const;
  /// max(f(1), ..., f(k)).
  std::int64_t ceiling(int k) const;
  /// True for the two Hadwiger kinds.
  bool bounds_hadwiger() const { return type == kind::hadwiger_k_plus_c || type == kind::hadwiger_max; }
  /// Human-readable formula such as "max(k-1, 2)".
  std::string formula() const;
  std::string kind_name() const;
};

/// Parses the names used on the command line: "block_cactus", "chordal",
/// "p3_free", "k2q_im_free:<q>", "edgeless_free:<t>", "linear:<offset>",
/// "max:<offset>:<constant>", "ramsey:<t>", "skodinis:<q>", "constant:<c>".
binding_function parse_binding(const std::string& name);

}  // namespace twomega
