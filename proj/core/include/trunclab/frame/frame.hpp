#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace trunclab::frame {

using Elem = std::size_t;
using Table = std::vector<std::vector<Elem>>;

struct FrameCheck {
  bool ok = true;
  std::string law;            // "partial order", "lattice", "distributivity"
  std::vector<Elem> witness;  // offending pair or triple
  std::string detail;
};

/// A finite distributive lattice, hence a frame. Elements are indices into
/// the label list.
class FiniteFrame {
public:
  /// `covers` are pairs (a, b) with a <= b; the order is their reflexive
  /// transitive closure. Throws InvariantError when check() fails.
  FiniteFrame(std::vector<std::string> labels, const std::vector<std::pair<Elem, Elem>>& covers);
  FiniteFrame(std::vector<std::string> labels, const std::vector<std::pair<std::string, std::string>>& covers);

  /// Validation without throwing; the witness names the first failure.
  static FrameCheck check(const std::vector<std::string>& labels, const std::vector<std::pair<Elem, Elem>>& covers);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem x) const { return labels_.at(x); }
  std::optional<Elem> index_of(const std::string& label) const;

  bool leq(Elem a, Elem b) const { return leq_[a][b]; }
  Elem join(Elem a, Elem b) const { return join_[a][b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a][b]; }
  Elem top() const { return top_; }
  Elem bottom() const { return bottom_; }
  /// Heyting implication a -> b.
  Elem implies(Elem a, Elem b) const { return implies_[a][b]; }
  Elem pseudocomplement(Elem a) const { return implies_[a][bottom_]; }
  /// a* v b = top.
  bool rather_below(Elem a, Elem b) const { return join(pseudocomplement(a), b) == top_; }
  bool complemented(Elem a) const { return join(a, pseudocomplement(a)) == top_; }
  std::vector<Elem> complemented_elements() const;
  std::vector<Elem> join_irreducibles() const;

  Elem join_all(const std::vector<Elem>& xs) const;
  Elem meet_all(const std::vector<Elem>& xs) const;

  /// The cover pairs of the order (Hasse diagram), for serialization.
  std::vector<std::pair<Elem, Elem>> hasse() const;

  friend bool operator==(const FiniteFrame& a, const FiniteFrame& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
  Table join_, meet_, implies_;
  Elem top_ = 0, bottom_ = 0;
};

using FramePtr = std::shared_ptr<const FiniteFrame>;

/// Chain with the given labels, bottom first.
FramePtr chain(std::vector<std::string> labels);
/// Powerset of the named atoms; labels "{a,b}", bottom "{}".
FramePtr boolean_frame(const std::vector<std::string>& atoms);
/// Componentwise order; labels "(x,y)".
FramePtr product(const FiniteFrame& a, const FiniteFrame& b);
/// Downsets of a poset on `n` points given by pairs (i, j) meaning i <= j;
/// labels "{...}" list the points. Throws PreconditionError past 20 downsets.
FramePtr downsets(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& order,
                  std::size_t max_size = 20);

/// A frame with a point: a frame map to 2, given by the elements it sends to top.
/// Finite points are exactly x |-> (x >= p) for join-irreducible p.
class PointedFiniteFrame {
public:
  /// Throws InvariantError if `point` is not a frame homomorphism.
  PointedFiniteFrame(FramePtr frame, std::vector<bool> point);
  /// x |-> (x >= p).
  static PointedFiniteFrame at(FramePtr frame, Elem p);

  const FiniteFrame& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  bool point(Elem x) const { return point_.at(x); }
  const std::vector<bool>& point_mask() const { return point_; }
  /// The least element sent to top.
  Elem point_generator() const;

  friend bool operator==(const PointedFiniteFrame& a, const PointedFiniteFrame& b) {
    return *a.frame_ == *b.frame_ && a.point_ == b.point_;
  }

private:
  FramePtr frame_;
  std::vector<bool> point_;
};

using PointedPtr = std::shared_ptr<const PointedFiniteFrame>;

inline PointedPtr pointed_at(FramePtr f, Elem p) {
  return std::make_shared<const PointedFiniteFrame>(PointedFiniteFrame::at(std::move(f), p));
}

}  // namespace trunclab::frame
