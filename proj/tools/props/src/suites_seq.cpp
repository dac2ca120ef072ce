#include <algorithm>
#include <set>

#include "models.hpp"
#include "tally.hpp"
#include "trunclab/kernel/kernel.hpp"
#include "trunclab/props/generators.hpp"
#include "trunclab/props/oracles.hpp"
#include "trunclab/seqspace/ex1.hpp"
#include "trunclab/trunc/analysis.hpp"

namespace trunclab::props {

namespace {

using seq::TailElement;

// Does f <= k g fail somewhere on 1..limit for every k up to kmax?
bool undominated(const TailElement& f, const TailElement& g, std::int64_t kmax) {
  for (std::int64_t k = 1; k <= kmax; ++k) {
    bool found = false;
    for (std::int64_t n = 1; n <= 10 * k + 10 && !found; ++n) found = f.value(n) > k * g.value(n);
    if (!found) return false;
  }
  return true;
}

std::vector<kernel::KernelSpec> seq_kernels(Sampler& rng) {
  seq::SeqTrunc m(static_cast<std::size_t>(rng.uniform(0, 2)));
  std::vector<kernel::KernelSpec> out = {kernel::SeqKernel::whole(m), kernel::SeqKernel::finite_support(m)};
  for (std::size_t j = 1; j <= m.degree() + 1; ++j) out.push_back(kernel::SeqKernel(m, std::nullopt, j));
  std::set<std::int64_t> pts;
  for (std::int64_t n = 1; n <= 5; ++n) {
    if (rng.coin()) pts.insert(n);
  }
  out.push_back(kernel::SeqKernel(m, pts, m.degree() + 1));
  return out;
}

}  // namespace

SuiteResult suite_ex1(const SuiteOptions& o) {
  SuiteResult r{"ex1"};
  Tally t(r);
  const std::size_t budget = std::max<std::size_t>(500, o.cases);
  t.run_case("battery", [&] {
    auto rep = seq::ex1_report(budget, o.seed);
    std::vector<Rational> recip;
    for (long n = 1; n <= 5; ++n) recip.emplace_back(1, n);
    t.expect(rep.not_bounded_away() && rep.g0_values == recip && !rep.g0_bounded_away.decreasing_values.empty(),
             [&] { return "(a) g0 reported bounded away from 0"; });
    t.expect(rep.not_simple(), [&] { return "(b) trunc reported simple"; });
    t.expect(rep.hyperarchimedean.verdict && rep.hyperarchimedean.pairs_checked >= 500,
             [&] { return "(c) hyperarchimedean refuted or under-sampled: " + rep.hyperarchimedean.reason; });
    t.expect(rep.kernel_12_hold() && rep.conditions.archimedean.samples >= 500 && rep.conditions.truncation.samples >= 500,
             [&] { return "(d) conditions (1), (2) not established on 500 samples"; });
    t.expect(rep.kernel_3_fails_at_g0() && rep.conditions.tminus.exact, [&] { return "(d) condition (3) not refuted at g0"; });
    t.expect(rep.not_pointwise_closed_at_g0() && rep.pointwise.agrees_with_conditions,
             [&] { return "(e) pointwise closure not refuted at g0"; });
    t.expect(rep.all_as_expected(), [&] { return "battery summary is not all as expected"; });

    // Independent: g0 tminus 1/n has finite support, and the running max over
    // n <= N sits exactly 1/N below g0 on 1..200, so the sup is g0.
    const auto g0 = seq::g0();
    const auto target = tail_values(g0, 200);
    bool in_k = true;
    std::vector<Rational> best(200, Rational(0));
    for (long n = 1; n <= 400; ++n) {
      auto h = ap(Op::tminus(Rational(1, n)), g0);
      in_k = in_k && h.tail_zero();
      for (std::int64_t x = 1; x <= 200; ++x) best[x - 1] = std::max(best[x - 1], h.value(x));
      if (n == 100 || n == 400) {
        bool gap = true;
        for (std::int64_t x = 1; x <= 200 && gap; ++x) {
          const Rational want = target[x - 1] - Rational(1, n);
          gap = best[x - 1] == (want > 0 ? want : Rational(0));
        }
        t.expect(gap, [&] { return "max of g0 tminus 1/k, k <= " + std::to_string(n) + ", is not g0 - 1/" + std::to_string(n); });
      }
    }
    t.expect(in_k && !g0.tail_zero(), [&] { return "g0 tminus 1/n left {tail 0}"; });
  });
  return r;
}

SuiteResult suite_degree_two(const SuiteOptions& o) {
  SuiteResult r{"degree-two"};
  Tally t(r);
  for (std::uint64_t s : {o.seed, o.seed + 1, o.seed + 99}) {
    t.run_case("seed " + std::to_string(s), [&] {
      auto h = seq::hyperarchimedean(seq::SeqTrunc(2), 16, s);
      t.expect(!h.verdict && h.witness, [&] { return "degree 2 not refuted"; });
      if (!h.witness) return;
      const auto& [f, g] = *h.witness;
      t.expect(f == TailElement::monomial(1) && g == TailElement::monomial(2),
               [&] { return "witness is " + f.to_string() + ", " + g.to_string(); });
      // 1/n restricted to coz(1/n^2) is 1/n, and no k gives 1/n <= k/n^2.
      t.expect(undominated(f, g, 50), [&] { return "witness is dominated"; });
    });
  }
  t.run_case("degree 1", [&] {
    auto h = seq::hyperarchimedean(seq::SeqTrunc(1), 64, o.seed);
    t.expect(h.verdict, [&] { return "degree 1 refuted: " + h.reason; });
  });
  return r;
}

SuiteResult suite_seq_closure(const SuiteOptions& o) {
  SuiteResult r{"seq-closure"};
  Tally t(r);
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i), [&] {
      seq::SeqTrunc m(static_cast<std::size_t>(rng.uniform(0, 2)));
      const TailElement a = m.sample(rng), b = m.sample(rng);
      const TailElement pa = m.sample(rng, true);
      const std::vector<std::pair<Op, std::vector<TailElement>>> cases = {
          {Op::add(), {a, b}},
          {Op::negate(), {a}},
          {Op::scale(rng.rational()), {a}},
          {Op::meet(), {a, b}},
          {Op::join(), {a, b}},
          {Op::truncate(), {pa}},
          {Op::tminus(rng.nonnegative()), {pa}},
          {Op::truncN(rng.positive()), {pa}},
      };
      for (const auto& [op, args] : cases) {
        const auto res = seq::tail_apply_op(op, args);
        t.expect(m.contains(res), [&] { return to_string(op) + " leaves " + m.name(); });
        std::int64_t reach = res.crossover();
        for (const auto& x : args) reach = std::max(reach, x.crossover());
        bool ok = true;
        for (std::int64_t n = 1; n <= reach + 10 && ok; ++n) {
          std::vector<Rational> v;
          for (const auto& x : args) v.push_back(x.value(n));
          ok = res.value(n) == apply_scalar(op, v);
        }
        t.expect(ok, [&] { return to_string(op) + " disagrees pointwise on " + args[0].to_string(); });
      }
    });
  }
  return r;
}

SuiteResult suite_kernel(const SuiteOptions& o) {
  SuiteResult r{"kernel"};
  Tally t(r);
  const std::size_t budget = 48;
  for (std::size_t i = 0; i < o.cases; ++i) {
    auto rng = case_rng(o, i);
    t.run_case(case_label(i) + " simple", [&] {
      auto x = random_space(rng, 2, 6);
      trunc::SimpleTrunc tr(x, random_components(x, rng));
      Subset s;
      for (std::size_t p = 1; p < x->size(); ++p) {
        if (rng.coin()) s = s.with(p);
      }
      kernel::KernelSpec k = kernel::SimpleKernel(tr, s);
      auto c = kernel::kernel_conditions(k, budget, o.seed + i);
      auto pc = kernel::pointwise_closed(k, budget, o.seed + i);
      t.expect(c.all_pass() && pc.closed, [&] { return "finite kernel " + kernel::describe(k) + " fails a condition"; });
      auto cl = kernel::kernel_closure(k, budget, o.seed + i);
      t.expect(cl.closed == k, [&] { return "closure moved a finite kernel: " + kernel::describe(cl.closed); });
      for (int n = 0; n < 8; ++n) {
        auto g = trunc::random_member(tr, rng);
        const auto& sk = std::get<kernel::SimpleKernel>(k);
        t.expect(sk.contains(g) == g.support().subset_of(sk.support()),
                 [&] { return "membership wrong for " + g.tuple_string(); });
      }
    });
    t.run_case(case_label(i) + " tail", [&] {
      for (const auto& k : seq_kernels(rng)) {
        auto c = kernel::kernel_conditions(k, budget, o.seed + i);
        auto pc = kernel::pointwise_closed(k, budget, o.seed + i);
        t.expect(c.all_pass() == pc.closed, [&] { return "conditions and pointwise closure disagree on " + kernel::describe(k); });
        auto cl = kernel::kernel_closure(k, budget, o.seed + i);
        auto cl2 = kernel::kernel_closure(cl.closed, budget, o.seed + i);
        t.expect(cl.converged && cl2.closed == cl.closed, [&] { return "closure not idempotent on " + kernel::describe(k); });
        t.expect(cl.conditions_pass,
                 [&] { return "closure of " + kernel::describe(k) + " fails a condition"; });
        const auto& before = std::get<kernel::SeqKernel>(k);
        const auto& after = std::get<kernel::SeqKernel>(cl.closed);
        bool extensive = true;
        for (int n = 0; n < 16; ++n) {
          auto g = before.model().sample(rng);
          if (before.contains(g)) extensive = extensive && after.contains(g);
        }
        for (std::size_t d = 1; d <= before.model().degree(); ++d) {
          auto g = TailElement::monomial(d);
          if (before.contains(g)) extensive = extensive && after.contains(g);
        }
        t.expect(extensive, [&] { return "closure of " + kernel::describe(k) + " lost a member"; });
        // {tail 0} below full degree is the one kind that fails, and at g0-type monomials.
        if (!c.all_pass()) {
          t.expect(!c.tminus.pass && pc.tail_witness && c.tminus.tail_witness && *pc.tail_witness == *c.tminus.tail_witness,
                   [&] { return "failure of " + kernel::describe(k) + " not witnessed by one element"; });
        }
      }
    });
  }
  return r;
}

}  // namespace trunclab::props
