#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trunclab/frame/real.hpp"

namespace trunclab::frame {

/// A surjective frame homomorphism between finite frames, unpointed.
struct FrameQuotient {
  FramePtr source;
  FramePtr target;
  std::vector<Elem> map;
};

FrameQuotient identity_quotient(const FramePtr& f);
/// x |-> x ^ a onto the downset of a.
FrameQuotient open_quotient(const FramePtr& f, Elem a);
/// x |-> x v a onto the upset of a.
FrameQuotient closed_quotient(const FramePtr& f, Elem a);
/// x |-> x** onto the regular elements.
FrameQuotient booleanization(const FramePtr& f);
/// Componentwise on a product frame built with product().
FrameQuotient product_quotient(const FrameQuotient& a, const FrameQuotient& b);

struct SurjectionCheck {
  bool ok = true;
  std::string detail;
  std::vector<Elem> witness;
};

/// Pointed frame surjection q: source -> target with target.point . q = source.point.
class FrameSurjection {
public:
  /// Throws InvariantError (with the check's detail) if the map is not a
  /// pointed surjective frame homomorphism.
  FrameSurjection(PointedPtr source, PointedPtr target, std::vector<Elem> map);
  /// The target gets the point at join-irreducible p; the source point is
  /// pulled back along the map.
  static FrameSurjection pointed(const FrameQuotient& q, Elem target_point);

  static SurjectionCheck check(const PointedFiniteFrame& source, const PointedFiniteFrame& target,
                               const std::vector<Elem>& map);

  const PointedPtr& source() const { return source_; }
  const PointedPtr& target() const { return target_; }
  Elem operator()(Elem x) const { return map_.at(x); }
  const std::vector<Elem>& map() const { return map_; }
  /// q*(y) = join {x : q(x) <= y}.
  Elem adjoint(Elem y) const { return adjoint_.at(y); }
  const std::vector<Elem>& adjoint_table() const { return adjoint_; }
  bool dense() const { return !density_witness_; }
  /// Some x != bottom with q(x) = bottom.
  std::optional<Elem> density_witness() const { return density_witness_; }

private:
  PointedPtr source_, target_;
  std::vector<Elem> map_, adjoint_;
  std::optional<Elem> density_witness_;
};

/// The grid of opens used to compare q . h' with h . p: all intervals and rays
/// whose finite ends come from the cut grid of the given values.
std::vector<Interval> grid_opens(const std::vector<Rational>& values);

struct DropResult {
  bool dropped = false;
  std::optional<FrameReal> h;
  Elem condition = 0;  // q(h'(-inf, inf)) in the target
  std::string reason;
  /// q(h'(U)) = h(U) on every grid open (only when dropped).
  bool square_verified = false;
};

/// h' may be extended-kind and unpointed on the source. Drops when
/// q(h'(-inf, inf)) is top; the infinite cells then map to bottom.
DropResult drop(const FrameSurjection& q, const FrameReal& h_prime);

struct E0qResult {
  bool member = false;
  std::optional<FrameReal> witness;  // h' on the source with drop(h') = h
  std::string method;                // "adjoint candidate" or "exhaustive search"
  std::size_t partitions_tried = 0;
  std::string reason;
};

/// h on the target. Tries the cells q*(x_i) first, then enumerates
/// complemented partitions of the source (bounded by `max_source`).
/// Throws PreconditionError for a non-dense q.
E0qResult e0q_member(const FrameSurjection& q, const FrameReal& h, std::size_t max_source = 20);
/// The two halves of e0q_member, exposed to compare them.
std::optional<FrameReal> e0q_candidate(const FrameSurjection& q, const FrameReal& h);
E0qResult e0q_exhaustive(const FrameSurjection& q, const FrameReal& h, std::size_t max_source = 20);

}  // namespace trunclab::frame
