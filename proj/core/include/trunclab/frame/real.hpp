#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "trunclab/frame/frame.hpp"
#include "trunclab/op.hpp"
#include "trunclab/rational.hpp"

namespace trunclab::frame {

/// Open interval (lo, hi) of the reals; infinite ends give rays.
struct Interval {
  ExtRational lo = ExtRational::neg_infinity();
  ExtRational hi = ExtRational::pos_infinity();

  static Interval below(Rational r) { return {ExtRational::neg_infinity(), std::move(r)}; }
  static Interval above(Rational r) { return {std::move(r), ExtRational::pos_infinity()}; }
  static Interval whole() { return {}; }
  bool contains(const ExtRational& v) const { return v.is_finite() && lo < v && v < hi; }
};

std::string to_string(const Interval& u);

struct Cell {
  ExtRational value;
  Elem element;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A step-valued frame real: a partition of top into disjoint cells, one
/// value per cell. Real kind: finite values and the point's cell at 0.
/// Extended kind may carry infinite values and need not respect the point.
class FrameReal {
public:
  enum class Kind { real, extended };

  /// Canonicalizes (drops bottom cells, merges equal values, sorts by value).
  /// Throws InvariantError on overlapping cells, a join other than top, or a
  /// real-kind violation.
  FrameReal(PointedPtr frame, std::vector<Cell> cells, Kind kind = Kind::real);

  static FrameReal zero(PointedPtr frame);

  const PointedPtr& pointed() const { return frame_; }
  const FiniteFrame& frame() const { return frame_->frame(); }
  const std::vector<Cell>& cells() const { return cells_; }
  Kind kind() const { return kind_; }
  bool is_finite() const;
  /// The cell containing the point has value 0.
  bool is_pointed() const;
  bool is_nonnegative() const;
  std::optional<ExtRational> value_at_point() const;

  /// g(U): join of the cells whose finite value lies in U.
  Elem eval(const Interval& u) const;
  Elem lower(const Rational& r) const { return eval(Interval::below(r)); }
  Elem upper(const Rational& r) const { return eval(Interval::above(r)); }
  /// g(0, inf) v g(-inf, 0).
  Elem cozero() const;

  std::vector<ExtRational> values() const;
  std::string to_string() const;

  friend bool operator==(const FrameReal& a, const FrameReal& b);

private:
  PointedPtr frame_;
  std::vector<Cell> cells_;
  Kind kind_;
};

/// The operation `op` computed cell by cell on the common refinement.
/// Operands must share a frame; the positive-cone ops need nonnegative operands.
FrameReal induced_op(const Op& op, std::span<const FrameReal> operands);
FrameReal induced_op(const Op& op, const FrameReal& a);
FrameReal induced_op(const Op& op, const FrameReal& a, const FrameReal& b);

/// [(1, x), (0, not x)]. Throws PreconditionError unless x is complemented and
/// misses the point.
FrameReal chi(const PointedPtr& frame, Elem x);

struct UnitalCheck {
  bool unital = false;
  std::optional<Elem> witness;  // coz u when unital
};

/// u = truncate(2u), and then u = chi(coz u).
UnitalCheck frame_uc_check(const FrameReal& u);

/// Cell-wise join of the family, checked against the cut equation
/// join_a a(r, inf) = b(r, inf) on the cut grid of all values.
struct FrameSup {
  FrameReal sup;
  bool verified = false;
  std::optional<Rational> bad_cut;
};

FrameSup frame_pointwise_sup(const std::vector<FrameReal>& family);

/// A monotone nonincreasing nonnegative sequence whose last term repeats.
struct FrameDini {
  bool pointwise_to_zero = false;
  bool uniform = false;
  std::vector<FrameReal> terms;
  /// Least m (1-based) with g_n(-inf, eps) = top for every n >= m.
  std::optional<std::size_t> index_for(const Rational& eps) const;
};

/// Throws PreconditionError for an empty, negative or increasing sequence.
FrameDini frame_dini(const std::vector<FrameReal>& seq);

}  // namespace trunclab::frame
