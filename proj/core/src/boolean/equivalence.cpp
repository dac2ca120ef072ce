#include "trunclab/boolean/equivalence.hpp"

#include <algorithm>

#include "trunclab/error.hpp"
#include "trunclab/trunc/simple_trunc.hpp"

namespace trunclab::boolean {

bool EquivalenceReport::all_verified() const {
  return complete && std::all_of(round_trips.begin(), round_trips.end(), [](const RoundTrip& r) { return r.verified; });
}

namespace {

RoundTrip from_check(std::string name, const MapCheck& c, const std::vector<std::string>& labels) {
  RoundTrip r{std::move(name), c.ok, std::nullopt, c.detail};
  if (c.counterexample) r.counterexample = std::pair{labels.at(c.counterexample->first), labels.at(c.counterexample->second)};
  return r;
}

RoundTrip check_stone_clopen(const PointedBooleanSpace& x) {
  RoundTrip r{"stone(clopen(X)) ~ X", false, std::nullopt, ""};
  auto bi = clopen(x);
  auto s = stone(bi);
  if (s.size() != x.size()) {
    r.detail = "point counts differ";
    return r;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto atom = x.format(Subset::singleton(i));
    auto j = s.index_of(atom);
    if (!j) {
      r.counterexample = std::pair{x.label(i), atom};
      r.detail = "no atom for point";
      return r;
    }
    if ((i == x.star()) != (*j == s.star())) {
      r.counterexample = std::pair{x.label(i), atom};
      r.detail = "star not preserved";
      return r;
    }
  }
  r.verified = true;
  return r;
}

}  // namespace

RoundTrip check_idealize_forget(const IdealizedBooleanAlgebra& bi) {
  auto a = iba_forget(bi);
  auto back = idealize(a);
  // idealize puts the ideal at [0, n) in the order iba_forget listed it and
  // the primed copies at [n, 2n). Map a -> a, a' -> not a.
  const std::size_t n = a.size();
  std::vector<std::size_t> map(back.algebra.size());
  for (std::size_t i = 0; i < n; ++i) {
    auto orig = bi.algebra.index_of(a.label(i));
    if (!orig) throw InvariantError("forgotten label missing from the algebra");
    map[i] = *orig;
    map[i + n] = bi.algebra.complement(*orig);
  }
  return from_check("idealize(iba_forget(B)) ~ B", check_iba_isomorphism(back, bi, map), back.algebra.labels());
}

EquivalenceReport equivalence_witness(const SpacePtr& x, std::size_t max_points) {
  EquivalenceReport report;
  if (x->size() > std::min(max_points, clopen_max_points)) {
    report.complete = false;
    return report;
  }
  report.round_trips.push_back(check_stone_clopen(*x));

  auto bi = clopen(*x);
  report.round_trips.push_back(check_idealize_forget(bi));

  auto via_trunc = trunc::uc(trunc::lc(x));
  auto via_algebra = iba_forget(bi);
  std::vector<std::size_t> map(via_trunc.size());
  std::optional<std::string> missing;
  for (std::size_t i = 0; i < via_trunc.size(); ++i) {
    auto j = via_algebra.index_of(via_trunc.label(i));
    if (!j) {
      missing = via_trunc.label(i);
      break;
    }
    map[i] = *j;
  }
  if (missing) {
    report.round_trips.push_back({"uc(lc(X)) ~ iba_forget(clopen(X))", false, std::pair{*missing, *missing},
                                  "label missing on the algebra side"});
  } else {
    report.round_trips.push_back(from_check("uc(lc(X)) ~ iba_forget(clopen(X))",
                                            check_gba_isomorphism(via_trunc, via_algebra, map), via_trunc.labels()));
  }
  return report;
}

}  // namespace trunclab::boolean
