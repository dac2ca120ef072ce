#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "trunclab/boolean/space.hpp"
#include "trunclab/op.hpp"
#include "trunclab/rational.hpp"
#include "trunclab/subset.hpp"

namespace trunclab::trunc {

using boolean::PointedBooleanSpace;
using boolean::SpacePtr;

/// A rational-valued function on a finite pointed space that vanishes at the
/// star. Values are indexed by point index; the star slot is always 0.
class SimpleElement {
public:
  /// The zero element.
  explicit SimpleElement(SpacePtr space);
  /// `values` has one entry per point; the star entry must be 0.
  SimpleElement(SpacePtr space, std::vector<Rational> values);

  /// Values for the non-star points, in point order.
  static SimpleElement from_tuple(SpacePtr space, const std::vector<Rational>& non_star_values);
  /// Unlisted points are 0. Throws InvariantError for an unknown label or a
  /// nonzero value at the star.
  static SimpleElement from_map(SpacePtr space, const std::map<std::string, Rational>& values);
  static SimpleElement indicator(SpacePtr space, Subset s, const Rational& coeff = 1);

  const SpacePtr& space() const { return space_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t i) const { return values_.at(i); }
  const Rational& at(const std::string& label) const;

  bool is_zero() const;
  bool is_nonnegative() const;
  Subset support() const;
  Subset level_set(const Rational& r) const;
  /// Distinct nonzero values in increasing order.
  std::vector<Rational> nonzero_values() const;
  Rational max_value() const;
  Rational min_value() const;

  /// Pointwise order.
  bool leq(const SimpleElement& o) const;

  /// "(v1,v2,...)" over non-star points.
  std::string tuple_string() const;
  /// "{p:v, ...}" over the support.
  std::string support_string() const;

  friend bool operator==(const SimpleElement& a, const SimpleElement& b);

private:
  SpacePtr space_;
  std::vector<Rational> values_;
};

/// Throws PreconditionError unless both live on equal spaces.
void require_same_space(const SimpleElement& a, const SimpleElement& b);

/// Pointwise lift of the op. Throws PreconditionError on a space mismatch, an
/// arity mismatch, or a negative operand to truncate/tminus/truncN.
SimpleElement apply_op(const Op& op, std::span<const SimpleElement> operands);

SimpleElement apply_op(const Op& op, const SimpleElement& a);
SimpleElement apply_op(const Op& op, const SimpleElement& a, const SimpleElement& b);

inline SimpleElement operator+(const SimpleElement& a, const SimpleElement& b) { return apply_op(Op::add(), a, b); }
inline SimpleElement operator-(const SimpleElement& a) { return apply_op(Op::negate(), a); }
inline SimpleElement operator-(const SimpleElement& a, const SimpleElement& b) { return a + (-b); }
inline SimpleElement operator*(const Rational& q, const SimpleElement& a) { return apply_op(Op::scale(q), a); }
inline SimpleElement meet(const SimpleElement& a, const SimpleElement& b) { return apply_op(Op::meet(), a, b); }
inline SimpleElement join(const SimpleElement& a, const SimpleElement& b) { return apply_op(Op::join(), a, b); }
inline SimpleElement truncate(const SimpleElement& a) { return apply_op(Op::truncate(), a); }
inline SimpleElement tminus(const SimpleElement& a, const Rational& r) { return apply_op(Op::tminus(r), a); }
inline SimpleElement truncN(const SimpleElement& a, const Rational& n) { return apply_op(Op::truncN(n), a); }
SimpleElement abs(const SimpleElement& a);
SimpleElement positive_part(const SimpleElement& a);

}  // namespace trunclab::trunc
