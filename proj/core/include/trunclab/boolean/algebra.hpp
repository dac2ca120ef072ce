#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "trunclab/boolean/space.hpp"
#include "trunclab/subset.hpp"

namespace trunclab::boolean {

using Table = std::vector<std::vector<std::size_t>>;

/// One failed law, with the carrier indices that break it.
struct Violation {
  std::string law;
  std::vector<std::size_t> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

/// Element labels plus explicit join, meet and difference tables. The tables
/// are stored as given; construction only checks that they are total and in
/// range, everything else is gba_validate's job.
class GeneralizedBooleanAlgebra {
public:
  GeneralizedBooleanAlgebra(std::vector<std::string> labels, Table join, Table meet,
                            std::size_t bottom, Table diff);

  /// A family of sets under union, intersection and difference. Throws
  /// InvariantError naming the first missing set when the family is not closed.
  static GeneralizedBooleanAlgebra from_family(const std::vector<Subset>& family,
                                               const std::function<std::string(Subset)>& label);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t diff(std::size_t a, std::size_t b) const { return diff_[a][b]; }
  std::size_t bottom() const { return bottom_; }
  bool leq(std::size_t a, std::size_t b) const { return meet_[a][b] == a; }

  const Table& join_table() const { return join_; }
  const Table& meet_table() const { return meet_; }
  const Table& diff_table() const { return diff_; }

  friend bool operator==(const GeneralizedBooleanAlgebra&, const GeneralizedBooleanAlgebra&) = default;

private:
  std::vector<std::string> labels_;
  Table join_, meet_, diff_;
  std::size_t bottom_;
};

/// A finite Boolean algebra with explicit tables.
class BooleanAlgebra {
public:
  BooleanAlgebra(std::vector<std::string> labels, Table join, Table meet,
                 std::vector<std::size_t> complement, std::size_t bottom, std::size_t top);

  /// The powerset of `n` points; element index == bitmask.
  static BooleanAlgebra powerset(std::size_t n, const std::function<std::string(Subset)>& label);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t complement(std::size_t a) const { return complement_[a]; }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  bool leq(std::size_t a, std::size_t b) const { return meet_[a][b] == a; }

  const Table& join_table() const { return join_; }
  const Table& meet_table() const { return meet_; }
  const std::vector<std::size_t>& complement_table() const { return complement_; }

  /// Minimal non-bottom elements.
  std::vector<std::size_t> atoms() const;

  friend bool operator==(const BooleanAlgebra&, const BooleanAlgebra&) = default;

private:
  std::vector<std::string> labels_;
  Table join_, meet_;
  std::vector<std::size_t> complement_;
  std::size_t bottom_, top_;
};

/// A Boolean algebra with a designated subset of its carrier, meant to be a
/// maximal ideal (see iba_validate).
struct IdealizedBooleanAlgebra {
  BooleanAlgebra algebra;
  std::vector<bool> ideal;

  bool in_ideal(std::size_t a) const { return ideal.at(a); }
  friend bool operator==(const IdealizedBooleanAlgebra&, const IdealizedBooleanAlgebra&) = default;
};

/// Exhaustive check of the lattice laws, bottom, distributivity, the two
/// difference equations and uniqueness of the difference.
ValidationReport gba_validate(const GeneralizedBooleanAlgebra& a);

/// Lattice laws, distributivity, bounds and complements over all pairs and triples.
ValidationReport boolean_validate(const BooleanAlgebra& b);

/// boolean_validate plus: the ideal contains bottom, is a proper downset closed
/// under joins, and holds exactly one of each b, not-b.
ValidationReport iba_validate(const IdealizedBooleanAlgebra& bi);

/// Table lookup; on a valid algebra this is the unique c with
/// c v b = a v b and c ^ b = bottom.
std::size_t gba_diff(const GeneralizedBooleanAlgebra& a, std::size_t x, std::size_t y);

/// Adjoins a primed copy of the carrier and returns (B, A) with A as the ideal.
/// Indices [0, n) are the original elements, [n, 2n) their primed copies.
IdealizedBooleanAlgebra idealize(const GeneralizedBooleanAlgebra& a);

/// The ideal with restricted operations and a \ b = a ^ not-b. Labels kept.
GeneralizedBooleanAlgebra iba_forget(const IdealizedBooleanAlgebra& bi);

/// Points are the atoms (labelled as in the algebra); the star is the one atom
/// outside the ideal. Throws InvariantError if the ideal is not maximal.
PointedBooleanSpace stone(const IdealizedBooleanAlgebra& bi);

/// Powerset of the points, ideal = subsets omitting the star. Element labels are
/// X.format(subset) and element index == bitmask.
IdealizedBooleanAlgebra clopen(const PointedBooleanSpace& x);

/// Largest space accepted by clopen (2^8 = 256 element algebra).
inline constexpr std::size_t clopen_max_points = 8;

/// A bijection between carriers that preserves every stored table, or the
/// first pair it fails on.
struct MapCheck {
  bool ok = false;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
  std::string detail;
};

MapCheck check_gba_isomorphism(const GeneralizedBooleanAlgebra& a, const GeneralizedBooleanAlgebra& b,
                               const std::vector<std::size_t>& map);
MapCheck check_iba_isomorphism(const IdealizedBooleanAlgebra& a, const IdealizedBooleanAlgebra& b,
                               const std::vector<std::size_t>& map);

/// Searches bijections of atoms (extended to joins of atoms) for a table-
/// preserving map. nullopt if none exists or the atom counts differ. Gives up
/// (nullopt, *exhausted = false) past `max_atoms`.
std::optional<std::vector<std::size_t>> find_gba_isomorphism(const GeneralizedBooleanAlgebra& a,
                                                             const GeneralizedBooleanAlgebra& b,
                                                             std::size_t max_atoms = 8,
                                                             bool* exhausted = nullptr);

/// Bijection of points taking star to star, preferring the identity on labels.
std::optional<std::vector<std::size_t>> find_pointed_bijection(const PointedBooleanSpace& a,
                                                               const PointedBooleanSpace& b);

}  // namespace trunclab::boolean
