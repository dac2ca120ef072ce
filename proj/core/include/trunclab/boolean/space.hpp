#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "trunclab/subset.hpp"

namespace trunclab::boolean {

/// A finite discrete pointed space: finitely many labelled points, one of
/// them designated. Finite discrete spaces are Boolean, so every subset is
/// clopen.
class PointedBooleanSpace {
public:
  /// Throws InvariantError when `star` is not among `points`, labels repeat,
  /// or there are more than Subset::max_points points.
  PointedBooleanSpace(std::vector<std::string> points, const std::string& star);

  const std::vector<std::string>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t star() const { return star_; }
  const std::string& star_label() const { return points_[star_]; }
  const std::string& label(std::size_t i) const { return points_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  Subset all() const { return Subset::first_n(size()); }
  Subset non_star() const { return all().without(star_); }

  /// "{a,b}" in point order, using point labels.
  std::string format(Subset s) const;

  friend bool operator==(const PointedBooleanSpace&, const PointedBooleanSpace&) = default;

private:
  std::vector<std::string> points_;
  std::size_t star_ = 0;
};

using SpacePtr = std::shared_ptr<const PointedBooleanSpace>;

inline SpacePtr make_space(std::vector<std::string> points, const std::string& star) {
  return std::make_shared<const PointedBooleanSpace>(std::move(points), star);
}

}  // namespace trunclab::boolean
