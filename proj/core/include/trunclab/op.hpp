#pragma once

#include <span>
#include <string>
#include <string_view>

#include "trunclab/rational.hpp"

namespace trunclab {

/// The trunc operations, shared by every model. Each tag denotes a continuous
/// function R^k -> R; the models lift it pointwise (simple elements, tail
/// elements) or cell-wise (frame reals).
struct Op {
  enum class Kind { add, negate, scale, meet, join, truncate, tminus, truncN };

  Kind kind = Kind::add;
  /// Factor for scale, threshold r for tminus, bound for truncN. Unused otherwise.
  Rational param = 0;

  static Op add() { return {Kind::add, 0}; }
  static Op negate() { return {Kind::negate, 0}; }
  static Op scale(Rational q) { return {Kind::scale, std::move(q)}; }
  static Op meet() { return {Kind::meet, 0}; }
  static Op join() { return {Kind::join, 0}; }
  static Op truncate() { return {Kind::truncate, 0}; }
  static Op tminus(Rational r) { return {Kind::tminus, std::move(r)}; }
  static Op truncN(Rational n) { return {Kind::truncN, std::move(n)}; }

  std::size_t arity() const;
  /// truncate, tminus and truncN are only defined on the positive cone.
  bool needs_nonnegative() const;

  friend bool operator==(const Op&, const Op&) = default;
};

/// Checks the parameter constraints (tminus r >= 0, truncN n > 0).
void validate(const Op& op);

/// Evaluates the real function behind `op`. Does not check positivity.
Rational apply_scalar(const Op& op, std::span<const Rational> args);

/// Tags as written on the command line: add, negate, scale:q, meet, join,
/// truncate, tminus:r, truncN:n.
Op parse_op(std::string_view text);
std::string to_string(const Op& op);

}  // namespace trunclab
