#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "trunclab/op.hpp"
#include "trunclab/rational.hpp"

namespace trunclab::seq {

/// A function on omega+1 that vanishes at omega:
///   value(n) = correction(n) + sum_k tail[k-1] * n^(-k),   n = 1, 2, ...
/// Canonical: no zero correction entries, no trailing zero tail coefficients.
class TailElement {
public:
  TailElement() = default;
  /// Throws InvariantError for correction keys < 1.
  TailElement(std::map<std::int64_t, Rational> correction, std::vector<Rational> tail);

  /// coeff * n^(-order), order >= 1.
  static TailElement monomial(std::size_t order, const Rational& coeff = 1);
  static TailElement indicator(const std::set<std::int64_t>& points, const Rational& coeff = 1);
  /// Finitely supported element with the given values.
  static TailElement finite(const std::map<std::int64_t, Rational>& values);

  const std::map<std::int64_t, Rational>& correction() const { return correction_; }
  const std::vector<Rational>& tail() const { return tail_; }

  Rational value(std::int64_t n) const;
  Rational tail_value(std::int64_t n) const;

  std::size_t degree() const { return tail_.size(); }
  bool is_zero() const { return correction_.empty() && tail_.empty(); }
  bool tail_zero() const { return tail_.empty(); }
  /// 1-based index of the first nonzero tail coefficient.
  std::optional<std::size_t> leading_order() const;
  /// Sign of the leading tail coefficient, 0 for a zero tail.
  int leading_sign() const;
  /// Largest corrected point, 0 if none.
  std::int64_t max_correction() const;
  /// Sum of |tail coefficients|.
  Rational tail_weight() const;

  /// Least N > max_correction() such that the sign of value(n) for all n >= N
  /// equals leading_sign().
  std::int64_t crossover() const;

  bool is_nonnegative() const;
  /// Finite support: the points below crossover() where the value is nonzero.
  /// Only meaningful for tail-zero elements.
  std::set<std::int64_t> finite_support() const;

  /// {correction: [n:v, ...], tail: [c1, ...]}
  std::string to_string() const;

  friend bool operator==(const TailElement&, const TailElement&) = default;

private:
  void canonicalize();

  std::map<std::int64_t, Rational> correction_;
  std::vector<Rational> tail_;
};

/// Exact pointwise lift of the op to omega+1. Results stay in the family: the
/// lattice ops and truncations only rewrite finitely many points below a
/// certified crossover bound. Throws PreconditionError for a negative operand
/// to truncate/tminus/truncN or an arity mismatch.
TailElement tail_apply_op(const Op& op, std::span<const TailElement> operands);
TailElement tail_apply_op(const Op& op, const TailElement& a);
TailElement tail_apply_op(const Op& op, const TailElement& a, const TailElement& b);

TailElement operator+(const TailElement& a, const TailElement& b);
TailElement operator-(const TailElement& a);
TailElement operator-(const TailElement& a, const TailElement& b);
TailElement operator*(const Rational& q, const TailElement& a);
TailElement meet(const TailElement& a, const TailElement& b);
TailElement join(const TailElement& a, const TailElement& b);
TailElement truncate(const TailElement& a);
TailElement tminus(const TailElement& a, const Rational& r);
TailElement truncN(const TailElement& a, const Rational& r);
TailElement abs(const TailElement& a);
/// a <= b everywhere.
bool leq(const TailElement& a, const TailElement& b);

/// f on the cozero set of g, 0 elsewhere.
TailElement restrict_to_cozero(const TailElement& f, const TailElement& g);
/// f on the points 1..n, 0 elsewhere.
TailElement restrict_to_prefix(const TailElement& f, std::int64_t n);

/// A subset of omega+1 of the form: explicit points below `bound`, all n >= bound
/// when `cofinite`, plus omega when `omega`. Canonical (bound minimal).
struct SeqOpen {
  std::set<std::int64_t> points;
  std::int64_t bound = 1;
  bool cofinite = false;
  bool omega = false;

  bool contains(std::int64_t n) const { return n >= bound ? cofinite : points.contains(n); }
  void canonicalize();
  friend bool operator==(const SeqOpen&, const SeqOpen&) = default;
};

/// {x in omega+1 : g(x) > r}.
SeqOpen above(const TailElement& g, const Rational& r);
SeqOpen unite(const SeqOpen& a, const SeqOpen& b);

}  // namespace trunclab::seq
