#include "trunclab/seqspace/seq_trunc.hpp"

#include <algorithm>

#include "trunclab/error.hpp"

namespace trunclab::seq {

TailElement SeqTrunc::sample(Sampler& rng, bool nonnegative) const {
  if (zero_) return {};
  std::map<std::int64_t, Rational> corr;
  for (std::int64_t n = 1; n <= 6; ++n) {
    if (rng.coin()) corr[n] = rng.rational();
  }
  std::vector<Rational> tail;
  for (std::size_t k = 0; k < degree_; ++k) tail.push_back(rng.coin(2, 3) ? rng.rational() : Rational(0));
  TailElement g(std::move(corr), std::move(tail));
  return nonnegative ? abs(g) : g;
}

std::string SeqTrunc::name() const {
  if (zero_) return "zero";
  if (degree_ == 0) return "simple part";
  return "degree " + std::to_string(degree_);
}

namespace {

Rational ratio_max(const TailElement& f, const TailElement& g, std::int64_t below) {
  Rational k = 0;
  for (std::int64_t n = 1; n < below; ++n) {
    const Rational gv = g.value(n);
    if (gv != 0) k = std::max(k, Rational(trunclab::abs(f.value(n)) / trunclab::abs(gv)));
  }
  return k;
}

}  // namespace

std::optional<Rational> domination_bound(const TailElement& f, const TailElement& g) {
  std::optional<Rational> k;
  if (f.tail_zero() || g.tail_zero()) {
    // Only finitely many points where f is nonzero (or g is nonzero) matter.
    if (g.tail_zero() && !f.tail_zero()) {
      // f nonzero cofinitely, g not: unbounded unless f vanishes off supp g,
      // which a nonzero tail rules out.
      return std::nullopt;
    }
    const auto below = std::max({f.crossover(), g.crossover(), f.max_correction() + 1, g.max_correction() + 1});
    // Off supp g, f must vanish.
    for (std::int64_t n = 1; n < below; ++n) {
      if (g.value(n) == 0 && f.value(n) != 0) return std::nullopt;
    }
    k = ratio_max(f, g, below);
  } else {
    const std::size_t jf = *f.leading_order();
    const std::size_t jg = *g.leading_order();
    if (jf < jg) return std::nullopt;
    const Rational a = trunclab::abs(g.tail()[jg - 1]);
    Rational rest = 0;
    for (std::size_t i = jg; i < g.degree(); ++i) rest += trunclab::abs(g.tail()[i]);
    // For n past both corrections and n >= 2 rest / a:
    //   |g(n)| >= n^-jg (a - rest/n) >= (a/2) n^-jg,  |f(n)| <= weight(f) n^-jg.
    const std::int64_t start = std::max({f.max_correction() + 1, g.max_correction() + 1,
                                         ceil_to_int(Rational(2) * rest / a), std::int64_t{1}});
    for (std::int64_t n = 1; n < start; ++n) {
      if (g.value(n) == 0 && f.value(n) != 0) return std::nullopt;
    }
    k = std::max(Rational(Rational(2) * f.tail_weight() / a), ratio_max(f, g, start));
  }
  if (!leq(abs(f), *k * abs(g))) throw InvariantError("domination certificate failed for " + f.to_string());
  return k;
}

SeqHyperResult hyperarchimedean(const SeqTrunc& t, std::size_t budget, std::uint64_t seed) {
  if (budget == 0) throw PreconditionError("hyperarchimedean needs a positive sample budget");
  SeqHyperResult r;
  auto check = [&](const TailElement& f, const TailElement& g) {
    ++r.pairs_checked;
    auto fg = restrict_to_cozero(f, g);
    if (!t.contains(fg)) {
      r.verdict = false;
      r.witness = std::pair{f, g};
      r.reason = "f restricted to coz g leaves the trunc";
      return false;
    }
    auto k = domination_bound(fg, g);
    if (!k) {
      r.verdict = false;
      r.witness = std::pair{f, g};
      r.reason = "f restricted to coz g is not dominated by any multiple of |g|";
      return false;
    }
    r.largest_bound = std::max(r.largest_bound, *k);
    return true;
  };
  if (!t.is_zero_trunc()) {
    for (std::size_t i = 1; i <= t.degree(); ++i) {
      for (std::size_t j = 1; j <= t.degree(); ++j) {
        if (!check(TailElement::monomial(i), TailElement::monomial(j))) return r;
      }
    }
  }
  Sampler rng(seed);
  for (std::size_t s = 0; s < budget; ++s) {
    auto f = t.sample(rng);
    auto g = t.sample(rng);
    if (!check(f, g)) return r;
  }
  return r;
}

BafInfinity baf_infinity(const TailElement& g) {
  if (!g.is_nonnegative()) throw PreconditionError("baf_infinity needs a nonnegative element");
  BafInfinity r;
  if (!g.tail_zero()) return r;
  auto h = TailElement::indicator(g.finite_support(), 2);
  if (!leq(truncate(g), tminus(h, 1))) throw InvariantError("h = 2 chi(supp g) fails truncate(g) <= h tminus 1");
  r.bounded_away = true;
  r.h = std::move(h);
  return r;
}

TailBoundedAway bounded_away_from_zero(const TailElement& g) {
  if (!g.is_nonnegative()) throw PreconditionError("bounded_away_from_zero needs a nonnegative element");
  TailBoundedAway r;
  if (g.tail_zero()) {
    Rational eps = 0;
    for (auto n : g.finite_support()) {
      const Rational v = g.value(n);
      if (eps == 0 || v < eps) eps = v;
    }
    r.bounded_away = eps > 0;
    r.epsilon = eps;
    return r;
  }
  // Positive from the crossover on and tending to 0: no positive lower bound.
  const auto n0 = g.crossover();
  for (std::int64_t n = n0; n < n0 + 5; ++n) r.decreasing_values.push_back(g.value(n));
  return r;
}

EnoughUc enough_uc_check(const SeqTrunc& t, std::size_t budget, std::uint64_t seed) {
  EnoughUc r;
  if (t.is_zero_trunc()) return r;
  auto check = [&](const TailElement& g) {
    ++r.checked;
    if (!g.tail_zero()) {
      // truncate(g) has infinite support; indicators of finite sets cannot cover it.
      r.verdict = false;
      r.witness = g;
      r.reason = "truncate(g) is positive at infinitely many points; every unital component has finite support";
      return false;
    }
    auto u = TailElement::indicator(g.finite_support());
    if (!leq(truncate(g), u)) throw InvariantError("chi(supp g) fails to dominate truncate(g)");
    return true;
  };
  if (t.contains(g0()) && !check(g0())) return r;
  Sampler rng(seed);
  for (std::size_t s = 0; s < budget; ++s) {
    if (!check(t.sample(rng, true))) return r;
  }
  return r;
}

Rational supremum_from(const TailElement& g, std::int64_t from) {
  if (!g.is_nonnegative()) throw PreconditionError("supremum_from needs a nonnegative element");
  from = std::max<std::int64_t>(from, 1);
  const Rational w = g.tail_weight();
  const std::int64_t past = g.max_correction() + 1;
  Rational best = 0;
  for (std::int64_t n = from;; ++n) {
    // Past the corrections g(n) <= w / n, so nothing later beats best once w/n <= best.
    if (n >= past && (w == 0 || (best > 0 && w / n <= best))) break;
    best = std::max(best, g.value(n));
  }
  return best;
}

std::int64_t TailDini::index_for(const Rational& eps) const {
  if (eps <= 0) throw PreconditionError("epsilon must be positive");
  for (std::int64_t m = 1;; ++m) {
    if (supremum_from(g, m + 1) < eps) return m;
  }
}

TailDini dini_prefix_family(const TailElement& g, std::int64_t terms) {
  TailDini d;
  d.g = g;
  for (std::int64_t m = 1; m <= terms; ++m) {
    auto h = g - restrict_to_prefix(g, m);
    if (!h.is_nonnegative()) throw PreconditionError("dini family needs a nonnegative element");
    d.suprema.push_back(supremum_from(h));
    if (m > 1 && d.suprema[m - 1] > d.suprema[m - 2]) d.uniform = false;
    // Pointwise: h_m vanishes on 1..m.
    for (std::int64_t n = 1; n <= m; ++n) {
      if (h.value(n) != 0) d.pointwise_to_zero = false;
    }
  }
  for (int k = 1; k <= 8; ++k) {
    const Rational eps(1, k);
    const auto m = d.index_for(eps);
    if (!(supremum_from(g - restrict_to_prefix(g, m)) < eps)) d.uniform = false;
  }
  return d;
}

}  // namespace trunclab::seq
