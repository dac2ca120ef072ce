#include <doctest.h>

#include "helpers.hpp"
#include "trunclab/error.hpp"
#include "trunclab/seqspace/ex1.hpp"
#include "trunclab/seqspace/seq_trunc.hpp"

using namespace trunclab;
using namespace trunclab::seq;
using testing_helpers::q;

TEST_CASE("truncate(3 g0) keeps the tail and pins n = 1, 2 to 1") {
  auto t = truncate(Rational(3) * g0());
  CHECK(t.tail() == std::vector<Rational>{3});
  CHECK(t.correction() == std::map<std::int64_t, Rational>{{1, -2}, {2, q("-1/2")}});
  CHECK(t.value(1) == 1);
  CHECK(t.value(2) == 1);
  CHECK(t.value(3) == 1);
  CHECK(t.value(7) == q("3/7"));
}

TEST_CASE("g0 tminus and join") {
  CHECK(tminus(g0(), q("1/2")) == TailElement::finite({{1, q("1/2")}}));
  CHECK(tminus(g0(), q("1/3")) == TailElement::finite({{1, q("2/3")}, {2, q("1/6")}}));
  CHECK(join(g0(), TailElement()) == g0());
  CHECK(tminus(g0(), q("1/2")).to_string() == "{correction: [1:1/2], tail: []}");
  CHECK(g0().to_string() == "{correction: [], tail: [1]}");
  CHECK_THROWS_AS(truncate(-g0()), PreconditionError);
  CHECK_THROWS_AS(TailElement({{0, 1}}, {}), InvariantError);
}

TEST_CASE("crossover bound") {
  // 1/n - 3/n^2 is negative for n < 3, zero at 3, positive after.
  TailElement d({}, {1, -3});
  CHECK(d.crossover() == 4);
  CHECK_FALSE(d.is_nonnegative());
  for (std::int64_t n = d.crossover(); n < d.crossover() + 20; ++n) CHECK(d.value(n) > 0);
  CHECK(TailElement({{5, 1}}, {}).crossover() == 6);
}

TEST_CASE("lattice operations agree with pointwise evaluation") {
  Sampler rng(11);
  SeqTrunc t2(2);
  const Op ops[] = {Op::add(), Op::negate(), Op::scale(q("-3/2")), Op::meet(), Op::join(),
                    Op::truncate(), Op::tminus(q("1/3")), Op::truncN(2)};
  for (int s = 0; s < 60; ++s) {
    for (const auto& op : ops) {
      auto a = t2.sample(rng, op.needs_nonnegative());
      auto b = t2.sample(rng);
      std::vector<TailElement> xs = {a};
      if (op.arity() == 2) xs.push_back(b);
      auto r = tail_apply_op(op, xs);
      CHECK(t2.contains(r));
      std::int64_t limit = r.crossover();
      for (const auto& x : xs) limit = std::max(limit, x.crossover());
      for (std::int64_t n = 1; n <= limit + 10; ++n) {
        std::vector<Rational> args;
        for (const auto& x : xs) args.push_back(x.value(n));
        REQUIRE_MESSAGE(r.value(n) == apply_scalar(op, args), to_string(op), " at n=", n, " on ", a.to_string());
      }
    }
  }
}

TEST_CASE("open sets above a level") {
  auto s = above(g0(), q("1/3"));
  CHECK(s.points == std::set<std::int64_t>{1, 2});
  CHECK_FALSE(s.cofinite);
  CHECK_FALSE(s.omega);
  auto z = above(g0(), 0);
  CHECK(z.cofinite);
  CHECK(z.contains(1000));
  CHECK_FALSE(z.omega);
  CHECK(above(g0(), -1).omega);
}

TEST_CASE("bounded away from infinity and the simple part") {
  CHECK_FALSE(baf_infinity(g0()).bounded_away);
  auto c = baf_infinity(TailElement::indicator({1, 2}));
  CHECK(c.bounded_away);
  CHECK(c.h == TailElement::indicator({1, 2}, 2));
  CHECK(baf_infinity(TailElement()).bounded_away);

  CHECK_FALSE(simple_part_member(g0()));
  CHECK(simple_part_member(TailElement::indicator({5})));
  CHECK(simple_part_member(tminus(g0(), q("1/2"))));
}

TEST_CASE("g0 is not bounded away from zero") {
  auto r = bounded_away_from_zero(g0());
  CHECK_FALSE(r.bounded_away);
  REQUIRE(r.decreasing_values.size() >= 2);
  for (std::size_t i = 1; i < r.decreasing_values.size(); ++i) {
    CHECK(r.decreasing_values[i] < r.decreasing_values[i - 1]);
  }
  CHECK(bounded_away_from_zero(TailElement::finite({{2, q("1/3")}, {4, 5}})).epsilon == q("1/3"));
}

TEST_CASE("hyperarchimedean by degree") {
  auto d1 = hyperarchimedean(SeqTrunc(1), 300, 5);
  CHECK(d1.verdict);
  CHECK(d1.pairs_checked == 301);

  auto d2 = hyperarchimedean(SeqTrunc(2), 300, 5);
  CHECK_FALSE(d2.verdict);
  REQUIRE(d2.witness.has_value());
  CHECK(d2.witness->first == TailElement::monomial(1));
  CHECK(d2.witness->second == TailElement::monomial(2));
}

TEST_CASE("domination bounds") {
  auto k = domination_bound(TailElement({{1, 4}}, {2}), g0());
  REQUIRE(k.has_value());
  CHECK(leq(abs(TailElement({{1, 4}}, {2})), *k * g0()));
  CHECK_FALSE(domination_bound(g0(), TailElement::indicator({1, 2})).has_value());
  CHECK_FALSE(domination_bound(TailElement::indicator({3}), TailElement::indicator({1, 2})).has_value());
}

TEST_CASE("enough unital components") {
  auto d1 = enough_uc_check(SeqTrunc(1), 50, 1);
  CHECK_FALSE(d1.verdict);
  CHECK(d1.witness == g0());
  CHECK(enough_uc_check(SeqTrunc::simple_part(), 200, 1).verdict);
  CHECK(enough_uc_check(SeqTrunc::zero_trunc(), 200, 1).verdict);
}

TEST_CASE("dini on the prefix family of g0") {
  auto d = dini_prefix_family(g0(), 12);
  CHECK(d.pointwise_to_zero);
  CHECK(d.uniform);
  for (std::int64_t m = 1; m <= 12; ++m) CHECK(d.suprema[m - 1] == Rational(1, m + 1));
  CHECK(d.index_for(q("1/3")) == 3);
  CHECK(d.index_for(q("1/10")) == 10);
  CHECK(supremum_from(g0(), 4) == q("1/4"));
}

TEST_CASE("the omega+1 counterexample report") {
  auto r = ex1_report(500, 0);
  CHECK(r.not_bounded_away());
  CHECK(r.not_simple());
  CHECK(r.hyperarchimedean.verdict);
  CHECK(r.hyperarchimedean.pairs_checked >= 500);
  CHECK(r.kernel_12_hold());
  CHECK(r.kernel_3_fails_at_g0());
  CHECK(r.conditions.archimedean.samples >= 500);
  CHECK(r.conditions.truncation.samples >= 500);
  CHECK(r.g0_tminus_third == TailElement::finite({{1, q("2/3")}, {2, q("1/6")}}));
  CHECK(r.not_pointwise_closed_at_g0());
  CHECK(r.all_as_expected());
}
