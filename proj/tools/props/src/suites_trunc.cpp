#include <algorithm>
#include <map>

#include "models.hpp"
#include "tally.hpp"
#include "trunclab/props/generators.hpp"
#include "trunclab/props/oracles.hpp"
#include "trunclab/trunc/analysis.hpp"
#include "trunclab/trunc/sequences.hpp"

namespace trunclab::props {

namespace {

using trunc::SimpleElement;

// Nonnegative samples of each model. Some are shrunk so that the bounded
// third axiom has a non-vacuous premise.
SimpleElement sample_simple(Sampler& rng) {
  auto x = random_space(rng, 2, 6);
  auto g = random_simple(x, rng, true);
  if (rng.coin(1, 3)) g = ap(Op::scale(Rational(1, rng.uniform(2, 12))), random_unit_simple(x, rng));
  return g;
}

seq::TailElement sample_tail(Sampler& rng) {
  seq::SeqTrunc t(static_cast<std::size_t>(rng.uniform(0, 2)));
  auto g = t.sample(rng, true);
  if (rng.coin(1, 3)) g = ap(Op::scale(Rational(1, rng.uniform(8, 40))), g);
  return g;
}

frame::FrameReal sample_real(Sampler& rng) {
  auto p = random_pointed(random_frame(rng), rng);
  auto g = random_frame_real(p, rng, true);
  if (rng.coin(1, 3)) g = ap(Op::scale(Rational(1, rng.uniform(8, 40))), g);
  return g;
}

template <class E>
void axioms(Tally& t, const E& g, const E& h, std::int64_t bound) {
  const auto gt = ap(Op::truncate(), g);
  const auto ht = ap(Op::truncate(), h);
  t.expect(le(ap(Op::meet(), g, ht), gt), [&] { return "T1 lower fails: g=" + show(g) + " h=" + show(h); });
  t.expect(le(gt, g), [&] { return "T1 upper fails: g=" + show(g); });
  t.expect(is_zero_elem(gt) == is_zero_elem(g), [&] { return "T2 fails: g=" + show(g); });
  bool premise = !is_zero_elem(g);
  for (std::int64_t n = 1; n <= bound && premise; ++n) {
    const auto ng = ap(Op::scale(n), g);
    premise = ap(Op::truncate(), ng) == ng;
  }
  if (premise) {
    t.expect(top_value(g) * bound <= 1,
             [&] { return "bounded T3 fails at N=" + std::to_string(bound) + ": g=" + show(g); });
  }
}

template <class E>
void lemma28(Tally& t, const E& g, std::int64_t n) {
  const auto meet_n = ap(Op::truncN(n), g);
  const auto minus_n = ap(Op::tminus(n), g);
  t.expect(ap(Op::add(), meet_n, minus_n) == g,
           [&] { return "g^n + g-n != g for n=" + std::to_string(n) + ", g=" + show(g); });
  t.expect(ap(Op::add(), meet_n, ap(Op::truncate(), minus_n)) == ap(Op::truncN(n + 1), g),
           [&] { return "g^n + trunc(g-n) != g^(n+1) for n=" + std::to_string(n) + ", g=" + show(g); });
}

template <class E>
E good_partial_sum(const E& g, std::int64_t m) {
  E sum = ap(Op::truncate(), ap(Op::tminus(0), g));
  for (std::int64_t n = 2; n <= m; ++n) sum = ap(Op::add(), sum, ap(Op::truncate(), ap(Op::tminus(n - 1), g)));
  return sum;
}

template <class E>
void partial_sums(Tally& t, const E& g, std::int64_t m) {
  t.expect(good_partial_sum(g, m) == ap(Op::truncN(m), g),
           [&] { return "g^m != sum of good terms for m=" + std::to_string(m) + ", g=" + show(g); });
}

// Union of {a > r} over the family against {g > r}, at every cut.
bool brute_sup(const std::vector<SimpleElement>& fam, const SimpleElement& g) {
  std::vector<Rational> vals(g.values());
  for (const auto& a : fam) vals.insert(vals.end(), a.values().begin(), a.values().end());
  for (const auto& iv : full_grid(vals)) {
    if (!iv.lo.is_finite()) continue;
    const auto& r = iv.lo.value();
    for (std::size_t i = 0; i < g.values().size(); ++i) {
      bool any = std::any_of(fam.begin(), fam.end(), [&](const SimpleElement& a) { return a[i] > r; });
      if (any != (g[i] > r)) return false;
    }
  }
  return true;
}

SimpleElement restrict_to(const SimpleElement& g, const boolean::SpacePtr& sub) {
  std::map<std::string, Rational> vals;
  for (const auto& l : sub->points()) {
    if (l != sub->star_label()) vals[l] = g.at(l);
  }
  return SimpleElement::from_map(sub, vals);
}

}  // namespace

SuiteResult suite_axioms(const SuiteOptions& o) {
  SuiteResult r{"axioms"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    const auto bound = rng.uniform(1, 8);
    t.run_case(case_label(i) + " simple", [&] {
      auto g = sample_simple(rng);
      axioms(t, g, random_simple(g.space(), rng, true), bound);
      axioms(t, SimpleElement(g.space()), g, bound);
    });
    t.run_case(case_label(i) + " tail", [&] { axioms(t, sample_tail(rng), sample_tail(rng), bound); });
    t.run_case(case_label(i) + " frame", [&] {
      auto g = sample_real(rng);
      axioms(t, g, random_frame_real(g.pointed(), rng, true), bound);
    });
  }
  return r;
}

SuiteResult suite_identities(const SuiteOptions& o) {
  SuiteResult r{"identities"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    const auto n = rng.uniform(1, 5);
    const auto m = rng.uniform(1, 6);
    t.run_case(case_label(i) + " simple", [&] {
      auto g = sample_simple(rng);
      lemma28(t, g, n);
      partial_sums(t, g, m);
      auto seq = trunc::truncation_sequence(g);
      t.expect(trunc::pointwise_sup(seq) == g && brute_sup(seq, g),
               [&] { return "sup of truncation sequence != g for g=" + show(g); });
      // Restriction to a subspace through the star is a truncation homomorphism.
      std::vector<std::string> keep = {"*"};
      for (std::size_t p = 1; p < g.space()->size(); ++p) {
        if (rng.coin()) keep.push_back(g.space()->label(p));
      }
      auto sub = boolean::make_space(keep, "*");
      std::vector<SimpleElement> fam = {g};
      for (auto k = rng.uniform(0, 3); k > 0; --k) fam.push_back(random_simple(g.space(), rng));
      std::vector<SimpleElement> image;
      for (const auto& a : fam) image.push_back(restrict_to(a, sub));
      t.expect(restrict_to(trunc::pointwise_sup(fam), sub) == trunc::pointwise_sup(image),
               [&] { return "restriction does not preserve the sup of a family containing " + show(g); });
    });
    t.run_case(case_label(i) + " tail", [&] {
      auto g = sample_tail(rng);
      lemma28(t, g, n);
      partial_sums(t, g, m);
      // Spot check against pointwise arithmetic on 1..100.
      auto lhs = good_partial_sum(g, m);
      auto gv = tail_values(g, 100);
      auto lv = tail_values(lhs, 100);
      bool ok = true;
      for (std::size_t k = 0; k < gv.size(); ++k) ok = ok && lv[k] == std::min(gv[k], Rational(m));
      t.expect(ok, [&] { return "good partial sum disagrees pointwise for g=" + show(g); });
      // g^N = g once N bounds g, and g^n <= g before.
      const auto big = std::max<std::int64_t>(1, ceil_to_int(top_value(g)));
      t.expect(ap(Op::truncN(big), g) == g, [&] { return "g^N != g for g=" + show(g); });
      for (std::int64_t k = 1; k < big; ++k) {
        t.expect(le(ap(Op::truncN(k), g), g), [&] { return "g^n > g for g=" + show(g); });
      }
    });
    t.run_case(case_label(i) + " frame", [&] {
      auto g = sample_real(rng);
      lemma28(t, g, n);
      partial_sums(t, g, m);
      const auto big = std::max<std::int64_t>(1, ceil_to_int(top_value(g)));
      std::vector<frame::FrameReal> seq;
      for (std::int64_t k = 1; k <= big; ++k) seq.push_back(ap(Op::truncN(k), g));
      auto sup = frame::frame_pointwise_sup(seq);
      bool cuts_ok = true;
      std::vector<Rational> vals;
      for (const auto& c : g.cells()) vals.push_back(c.value.value());
      for (const auto& iv : full_grid(vals)) {
        if (!iv.lo.is_finite()) continue;
        frame::Elem u = g.frame().bottom();
        for (const auto& a : seq) u = g.frame().join(u, a.upper(iv.lo.value()));
        cuts_ok = cuts_ok && u == g.upper(iv.lo.value());
      }
      t.expect(sup.sup == g && sup.verified && cuts_ok,
               [&] { return "sup of truncation sequence != g for g=" + show(g); });
    });
  }
  return r;
}

SuiteResult suite_good_sequences(const SuiteOptions& o) {
  SuiteResult r{"good-sequences"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i), [&] {
      auto x = random_space(rng, 2, 6);
      auto g = random_simple(x, rng, true);
      auto good = trunc::good_from_element(g);
      t.expect(trunc::check_good_sequence(good).ok, [&] { return "not good: g=" + show(g); });
      for (std::size_t n = 0; n < good.terms.size(); ++n) {
        t.expect(good.terms[n] == brute_good_term(g, static_cast<std::int64_t>(n) + 1),
                 [&] { return "term " + std::to_string(n + 1) + " wrong for g=" + show(g); });
      }
      const auto required = std::max<std::int64_t>(1, ceil_to_int(top_value(g)));
      t.expect(brute_good_term(g, required + 1).is_zero(), [&] { return "terms past m are not zero"; });
      auto padded = trunc::good_from_element(g, required + rng.uniform(0, 3));
      t.expect(padded.terms.size() == good.terms.size(), [&] { return "padding changed the sequence"; });
      t.expect(trunc::element_from_good(good) == g, [&] { return "round trip fails for g=" + show(g); });
      auto ts = trunc::truncation_sequence_check(x, trunc::truncation_sequence(g));
      t.expect(ts.ok && ts.element && *ts.element == g, [&] { return "truncation sequence rejected: " + ts.reason; });
      t.expect(ts.differences == good.terms, [&] { return "differences != good sequence for g=" + show(g); });
    });
  }
  return r;
}

SuiteResult suite_normal_form(const SuiteOptions& o) {
  SuiteResult r{"normal-form"};
  Tally t(r);
  auto by_coeff = [](std::vector<trunc::NormalTerm> v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.coeff < b.coeff; });
    return v;
  };
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i), [&] {
      auto x = random_space(rng, 2, 7);
      auto g = random_unit_simple(x, rng);
      if (g.is_zero()) g = SimpleElement::indicator(x, Subset::singleton(1), rng.positive(1, 5));
      for (const auto& e : {g, random_simple(x, rng)}) {
        auto nf = trunc::normal_form(e);
        t.expect(trunc::from_normal_form(x, nf) == e, [&] { return "reconstruction fails for " + show(e); });
        t.expect(by_coeff(nf) == by_coeff(brute_normal_form(e)), [&] { return "normal form differs from value classes"; });
        for (std::size_t a = 0; a < nf.size(); ++a) {
          t.expect(nf[a].coeff != 0 && !nf[a].component.empty(), [&] { return "zero term in normal form"; });
          for (std::size_t b = a + 1; b < nf.size(); ++b) {
            t.expect(nf[a].component.disjoint(nf[b].component) && nf[a].coeff != nf[b].coeff,
                     [&] { return "overlapping or repeated terms for " + show(e); });
          }
        }
      }
      // Peel lowest levels off g until nothing is left.
      std::map<Rational, Subset> merged;
      std::size_t steps = 0;
      const std::size_t distinct = brute_normal_form(g).size();
      auto cur = g;
      while (!cur.is_zero() && steps <= distinct) {
        auto st = trunc::clearance_step(cur);
        auto nonzero = cur.nonzero_values();
        t.expect(st.delta == *std::min_element(nonzero.begin(), nonzero.end()) && st.delta == trunc::clearance(cur),
                 [&] { return "clearance is not the least nonzero value of " + show(cur); });
        t.expect(st.rest + ap(Op::scale(st.delta), st.component) == cur && st.rest.support().disjoint(st.component.support()),
                 [&] { return "step does not split " + show(cur); });
        merged[st.delta] = merged[st.delta] | st.component.support();
        cur = st.rest;
        ++steps;
      }
      t.expect(steps <= distinct, [&] { return "clearance loop ran past the number of values of " + show(g); });
      std::vector<trunc::NormalTerm> from_steps;
      for (const auto& [d, s] : merged) from_steps.push_back({d, s});
      t.expect(from_steps == by_coeff(trunc::normal_form(g)), [&] { return "merged steps != normal form for " + show(g); });
    });
  }
  return r;
}

SuiteResult suite_bounded_away(const SuiteOptions& o) {
  SuiteResult r{"bounded-away"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i) + " simple", [&] {
      auto x = random_space(rng, 2, 6);
      auto family = random_components(x, rng);
      trunc::SimpleTrunc tr(x, family);
      auto g = trunc::random_member(tr, rng, true);
      auto b = trunc::bounded_away_from_zero(g);
      auto bt = trunc::bounded_away_from_zero(ap(Op::truncate(), g));
      t.expect(b.bounded_away == bt.bounded_away, [&] { return "g and its truncation disagree: " + show(g); });
      if (!g.is_zero()) {
        auto vals = g.nonzero_values();
        const auto least = *std::min_element(vals.begin(), vals.end());
        t.expect(b.bounded_away && b.epsilon == least && b.component_check,
                 [&] { return "positive simple element not bounded away: " + show(g); });
      }
    });
    t.run_case(case_label(i) + " tail", [&] {
      auto g = sample_tail(rng);
      auto b = seq::bounded_away_from_zero(g);
      auto bt = seq::bounded_away_from_zero(ap(Op::truncate(), g));
      t.expect(b.bounded_away == bt.bounded_away, [&] { return "g and its truncation disagree: " + show(g); });
      // A nonzero tail means values decaying to 0, so no positive lower bound.
      const bool expect_away = g.tail_zero();
      if (!expect_away) {
        auto v = tail_values(g, 400);
        t.expect(v.back() > 0 && v.back() < v[v.size() / 2], [&] { return "tail does not decay for " + show(g); });
      }
      if (!g.is_zero()) {
        t.expect(b.bounded_away == expect_away, [&] { return "bounded-away verdict wrong for " + show(g); });
      }
    });
  }
  return r;
}

}  // namespace trunclab::props
