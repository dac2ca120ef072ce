#include "trunclab/boolean/space.hpp"

#include <algorithm>
#include <set>

#include "trunclab/error.hpp"

namespace trunclab::boolean {

PointedBooleanSpace::PointedBooleanSpace(std::vector<std::string> points, const std::string& star)
    : points_(std::move(points)) {
  if (points_.size() > Subset::max_points) {
    throw InvariantError("space has " + std::to_string(points_.size()) + " points; at most " +
                         std::to_string(Subset::max_points) + " are supported");
  }
  std::set<std::string> seen;
  for (const auto& p : points_) {
    if (!seen.insert(p).second) throw InvariantError("duplicate point label '" + p + "'");
  }
  auto it = std::find(points_.begin(), points_.end(), star);
  if (it == points_.end()) throw InvariantError("star not in points ('" + star + "')");
  star_ = static_cast<std::size_t>(it - points_.begin());
}

std::optional<std::size_t> PointedBooleanSpace::index_of(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

std::string PointedBooleanSpace::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (auto i : s.indices()) {
    if (!first) out += ",";
    out += points_.at(i);
    first = false;
  }
  return out + "}";
}

}  // namespace trunclab::boolean
