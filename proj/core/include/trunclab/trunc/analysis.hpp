#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trunclab/random.hpp"
#include "trunclab/trunc/simple_trunc.hpp"

namespace trunclab::trunc {

/// Least n >= 1 with g <= n * truncate(g). Throws for negative g.
std::int64_t is_bounded(const SimpleElement& g);

struct BoundedAwayResult {
  bool bounded_away = false;
  Rational epsilon = 0;  // the clearance when bounded_away
  std::int64_t n = 0;    // ceil(1/epsilon)
  /// truncate(n g) is a unital component (checked, not assumed).
  bool component_check = false;
};

BoundedAwayResult bounded_away_from_zero(const SimpleElement& g);

/// f restricted to the cozero set of g.
SimpleElement restrict_to_cozero(const SimpleElement& f, const SimpleElement& g);

/// Uniform random member: random coefficients on a random subset of atoms.
SimpleElement random_member(const SimpleTrunc& t, Sampler& rng, bool nonnegative = false);

struct SimpleHyperResult {
  bool verdict = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<SimpleElement, SimpleElement>> witness;
  std::string reason;
};

/// For `budget` sampled pairs (f, g) of members, checks that f restricted to
/// coz g is a member and is dominated by k|g| for some k. Throws for budget 0.
SimpleHyperResult hyperarchimedean(const SimpleTrunc& t, std::size_t budget, std::uint64_t seed);

struct YosidaResult {
  SpacePtr quotient;
  /// Point index in the original space -> point index in the quotient.
  std::vector<std::size_t> map;
  std::vector<SimpleElement> generators;
  bool separates = false;
  bool pointed = false;
};

/// Identifies points on which every generator agrees; points where every
/// generator vanishes go to the star. Classes are labelled by joining their
/// member labels with '+', ordered by lowest member.
YosidaResult yosida_quotient(const SpacePtr& space, const std::vector<SimpleElement>& gens);

SimpleElement pointwise_sup(const std::vector<SimpleElement>& fam);

/// Cut values for the sup check: every value, midpoints, and one beyond each end.
std::vector<Rational> cut_grid(std::vector<Rational> values);

/// True iff at every grid cut r the union of {a > r} equals {b > r}.
/// On failure, *bad_cut receives the first offending r.
bool is_pointwise_sup(const std::vector<SimpleElement>& fam, const SimpleElement& b, Rational* bad_cut = nullptr);

struct DiniReport {
  bool pointwise_to_zero = false;
  bool uniform = false;
  std::vector<Rational> maxima;  // max value of each term
  /// Least 1-based m with max of term n < eps for all n >= m.
  std::optional<std::size_t> index_for(const Rational& eps) const;
};

/// Input must be nonnegative, pointwise nonincreasing; its last term is the
/// stable tail. Throws PreconditionError with the offending index otherwise.
DiniReport dini_check(const std::vector<SimpleElement>& seq);

}  // namespace trunclab::trunc
