#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trunclab/random.hpp"
#include "trunclab/seqspace/tail_element.hpp"

namespace trunclab::seq {

/// All tail elements of tail degree <= degree. Degree 0 is the finitely
/// supported part; the zero trunc is {0}.
class SeqTrunc {
public:
  explicit SeqTrunc(std::size_t degree = 1) : degree_(degree) {}
  static SeqTrunc zero_trunc() {
    SeqTrunc t(0);
    t.zero_ = true;
    return t;
  }
  /// The simple part of any degree: finitely supported elements.
  static SeqTrunc simple_part() { return SeqTrunc(0); }

  std::size_t degree() const { return degree_; }
  bool is_zero_trunc() const { return zero_; }
  bool contains(const TailElement& g) const { return zero_ ? g.is_zero() : g.degree() <= degree_; }

  /// Random element: corrections on 1..6, tail coefficients up to the degree.
  TailElement sample(Sampler& rng, bool nonnegative = false) const;

  std::string name() const;
  friend bool operator==(const SeqTrunc&, const SeqTrunc&) = default;

private:
  std::size_t degree_;
  bool zero_ = false;
};

/// The canonical 1/n.
inline TailElement g0() { return TailElement::monomial(1); }

/// Least k with |f| <= k |g|, certified; nullopt when no k exists.
/// Throws InvariantError if the certificate fails its own exact check.
std::optional<Rational> domination_bound(const TailElement& f, const TailElement& g);

struct SeqHyperResult {
  bool verdict = true;
  std::size_t pairs_checked = 0;
  std::optional<std::pair<TailElement, TailElement>> witness;
  std::string reason;
  Rational largest_bound = 0;  // largest certified k seen
};

/// Structured monomial pairs first (deterministic refutations), then
/// `budget` seeded samples. Throws PreconditionError for budget 0.
SeqHyperResult hyperarchimedean(const SeqTrunc& t, std::size_t budget, std::uint64_t seed);

struct BafInfinity {
  bool bounded_away = false;
  std::optional<TailElement> h;  // 2 * chi(supp g), with truncate(g) <= h tminus 1 checked
};

/// Vanishes near omega, i.e. the tail is zero. Throws for negative g.
BafInfinity baf_infinity(const TailElement& g);

struct TailBoundedAway {
  bool bounded_away = false;
  Rational epsilon = 0;
  /// For a nonzero tail: the first values past the crossover, which decrease to 0.
  std::vector<Rational> decreasing_values;
};

TailBoundedAway bounded_away_from_zero(const TailElement& g);

/// Finite range, equivalently zero tail.
inline bool simple_part_member(const TailElement& g) { return g.tail_zero(); }

struct EnoughUc {
  bool verdict = true;
  std::optional<TailElement> witness;
  std::size_t checked = 0;
  std::string reason;
};

/// Unital components are the indicators of finite sets. Tries g0 first when
/// the trunc contains it, then `budget` nonnegative samples.
EnoughUc enough_uc_check(const SeqTrunc& t, std::size_t budget, std::uint64_t seed);

/// Supremum of g over the points n >= from. g must be nonnegative.
Rational supremum_from(const TailElement& g, std::int64_t from = 1);

/// The family h_m = g - (g restricted to 1..m), m = 1, 2, ..., decreases to 0
/// pointwise. On omega+1 it also does so uniformly.
struct TailDini {
  TailElement g;
  bool pointwise_to_zero = true;
  bool uniform = true;
  /// sup h_m for m = 1..terms.
  std::vector<Rational> suprema;
  /// Least m >= 1 with h_m < eps everywhere.
  std::int64_t index_for(const Rational& eps) const;
};

TailDini dini_prefix_family(const TailElement& g, std::int64_t terms);

}  // namespace trunclab::seq
