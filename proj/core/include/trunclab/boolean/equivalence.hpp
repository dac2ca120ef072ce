#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trunclab/boolean/algebra.hpp"

namespace trunclab::boolean {

struct RoundTrip {
  std::string name;
  bool verified = false;
  /// Labels of a pair on which the natural map fails.
  std::optional<std::pair<std::string, std::string>> counterexample;
  std::string detail;
};

struct EquivalenceReport {
  bool complete = true;  // false when the space exceeded the bound
  std::vector<RoundTrip> round_trips;
  bool all_verified() const;
};

/// Largest space equivalence_witness works on: 2^6 = 64 element algebras.
inline constexpr std::size_t equivalence_max_points = 6;

/// Checks the natural maps for
///   stone(clopen(X)) ~ X                  x -> atom {x}
///   idealize(iba_forget(clopen(X))) ~ clopen(X)   a -> a, a' -> not a
///   uc(lc(X)) ~ iba_forget(clopen(X))     identity on labels
EquivalenceReport equivalence_witness(const SpacePtr& x, std::size_t max_points = equivalence_max_points);

/// The second round trip for an arbitrary idealized algebra.
RoundTrip check_idealize_forget(const IdealizedBooleanAlgebra& bi);

}  // namespace trunclab::boolean
