#include <doctest.h>

#include "helpers.hpp"
#include "trunclab/error.hpp"
#include "trunclab/frame/surjection.hpp"

using namespace trunclab;
using namespace trunclab::frame;
using testing_helpers::q;

namespace {

struct F4 {
  FramePtr f = boolean_frame({"a", "b"});
  Elem bot = 0, a = 1, b = 2, top = 3;
  PointedPtr pf = pointed_at(f, a);
  FrameReal chi_b() const { return chi(pf, b); }
};

FramePtr c3() { return chain({"bot", "m", "top"}); }

// Booleanization of C3 onto 2, point at m.
FrameSurjection c3_boolean() { return FrameSurjection::pointed(booleanization(c3()), 1); }

}  // namespace

TEST_CASE("derived tables") {
  F4 x;
  CHECK(x.f->label(x.a) == "{a}");
  CHECK(x.f->pseudocomplement(x.a) == x.b);
  CHECK(x.f->rather_below(x.a, x.a));
  CHECK(x.f->complemented_elements().size() == 4);

  auto c = c3();
  CHECK(c->pseudocomplement(1) == c->bottom());
  CHECK(c->rather_below(1, 2));
  CHECK_FALSE(c->rather_below(1, 1));
  CHECK(c->complemented_elements() == std::vector<Elem>{0, 2});
  CHECK(c->implies(2, 1) == 1);
  CHECK(c->join_irreducibles() == std::vector<Elem>{1, 2});
}

TEST_CASE("the pentagon is rejected with a distributivity witness") {
  std::vector<std::string> labels = {"0", "a", "b", "c", "1"};
  std::vector<std::pair<Elem, Elem>> covers = {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}};
  auto chk = FiniteFrame::check(labels, covers);
  CHECK_FALSE(chk.ok);
  CHECK(chk.law == "distributivity");
  CHECK(chk.witness.size() == 3);
  CHECK_THROWS_AS(FiniteFrame(labels, covers), InvariantError);

  auto cyc = FiniteFrame::check({"x", "y"}, {{0, 1}, {1, 0}});
  CHECK(cyc.law == "partial order");
  auto anti = FiniteFrame::check({"0", "x", "y"}, {{0, 1}, {0, 2}});
  CHECK(anti.law == "lattice");
}

TEST_CASE("points are frame maps") {
  auto c = c3();
  CHECK_THROWS_AS(PointedFiniteFrame(c, {false, true, false}), InvariantError);
  auto m = PointedFiniteFrame::at(c, 1);
  CHECK(m.point_generator() == 1);
  CHECK_THROWS_AS(PointedFiniteFrame::at(c, 0), InvariantError);
  // In F4 the point at top is not prime.
  F4 x;
  CHECK_THROWS_AS(PointedFiniteFrame::at(x.f, x.top), InvariantError);
}

TEST_CASE("evaluation on F4") {
  F4 x;
  auto g = x.chi_b();
  CHECK(g.lower(q("1/2")) == x.a);
  CHECK(g.upper(-1) == x.top);
  CHECK(g.upper(q("1/2")) == x.b);
  CHECK(g.eval(Interval{ExtRational(q("1/2")), ExtRational(q("3/2"))}) == x.b);
  auto z = FrameReal::zero(x.pf);
  CHECK(z.lower(q("1/10")) == x.top);
  CHECK(z.lower(0) == x.bot);
  CHECK(z.lower(-1) == x.bot);
}

TEST_CASE("frame real invariants") {
  F4 x;
  CHECK_THROWS_AS(FrameReal(x.pf, {{Rational(1), x.a}, {Rational(0), x.b}}), InvariantError);
  CHECK_THROWS_AS(FrameReal(x.pf, {{Rational(1), x.b}}), InvariantError);
  CHECK_THROWS_AS(FrameReal(x.pf, {{Rational(1), x.b}, {Rational(0), x.top}}), InvariantError);
  CHECK_THROWS_AS(FrameReal(x.pf, {{ExtRational::pos_infinity(), x.b}, {Rational(0), x.a}}), InvariantError);
  FrameReal ext(x.pf, {{ExtRational::pos_infinity(), x.b}, {Rational(0), x.a}}, FrameReal::Kind::extended);
  CHECK_FALSE(ext.is_finite());
  FrameReal merged(x.pf, {{Rational(0), x.a}, {Rational(0), x.b}});
  CHECK(merged == FrameReal::zero(x.pf));
}

TEST_CASE("induced operations on F4") {
  F4 x;
  auto g = x.chi_b();
  auto two = induced_op(Op::add(), g, g);
  CHECK(two.cells() == std::vector<Cell>{{Rational(0), x.a}, {Rational(2), x.b}});
  CHECK(two == induced_op(Op::scale(2), g));
  CHECK(induced_op(Op::truncate(), two) == g);
  CHECK(induced_op(Op::add(), g, induced_op(Op::negate(), g)) == FrameReal::zero(x.pf));
  CHECK(induced_op(Op::tminus(1), two) == g);
  CHECK_THROWS_AS(induced_op(Op::truncate(), induced_op(Op::negate(), g)), PreconditionError);
}

TEST_CASE("characteristic functions") {
  F4 x;
  auto u = x.chi_b();
  CHECK(u.to_string() == "[(0,{a}), (1,{b})]");
  auto c = frame_uc_check(u);
  CHECK(c.unital);
  CHECK(c.witness == x.b);
  CHECK_THROWS_WITH_AS(chi(x.pf, x.a), "point in cell {a}", PreconditionError);
  CHECK_FALSE(frame_uc_check(induced_op(Op::scale(2), u)).unital);
  CHECK(frame_uc_check(FrameReal::zero(x.pf)).unital);

  auto cp = pointed_at(c3(), 1);
  CHECK_THROWS_AS(chi(cp, 1), PreconditionError);
}

TEST_CASE("surjections") {
  auto qb = c3_boolean();
  CHECK(qb.dense());
  CHECK(qb.adjoint(0) == 0);
  CHECK(qb.adjoint(1) == 2);

  F4 x;
  auto id = FrameSurjection::pointed(identity_quotient(x.f), x.a);
  CHECK(id.dense());
  for (Elem y = 0; y < 4; ++y) CHECK(id.adjoint(y) == y);

  // q'(m) = bottom; the point has to sit at top.
  auto c = c3();
  auto two = chain({"0", "1"});
  FrameSurjection qp(pointed_at(c, 2), pointed_at(two, 1), {0, 0, 1});
  CHECK_FALSE(qp.dense());
  CHECK(qp.density_witness() == Elem{1});

  auto bad = FrameSurjection::check(*pointed_at(c, 1), *pointed_at(two, 1), {0, 0, 1});
  CHECK_FALSE(bad.ok);
  CHECK(bad.detail == "point not preserved at m");
  CHECK_THROWS_AS(FrameSurjection(pointed_at(c, 2), pointed_at(two, 1), {0, 1, 0}), InvariantError);
}

TEST_CASE("galois law for the standard quotients") {
  auto f = product(*c3(), *boolean_frame({"p"}));
  for (Elem a = 0; a < f->size(); ++a) {
    for (const auto& quo : {identity_quotient(f), open_quotient(f, a), closed_quotient(f, a), booleanization(f)}) {
      const auto& t = *quo.target;
      for (auto p : t.join_irreducibles()) {
        auto s = FrameSurjection::pointed(quo, p);
        for (Elem x = 0; x < f->size(); ++x) {
          for (Elem y = 0; y < t.size(); ++y) CHECK(t.leq(s(x), y) == f->leq(x, s.adjoint(y)));
        }
      }
    }
  }
}

TEST_CASE("drop") {
  F4 x;
  auto id = FrameSurjection::pointed(identity_quotient(x.f), x.a);
  auto d = drop(id, x.chi_b());
  CHECK(d.dropped);
  CHECK(d.square_verified);
  CHECK(*d.h == x.chi_b());

  auto qb = c3_boolean();
  auto z = drop(qb, FrameReal::zero(qb.source()));
  CHECK(z.dropped);
  CHECK(z.condition == qb.target()->frame().top());
  CHECK(*z.h == FrameReal::zero(qb.target()));

  auto c = c3();
  auto two = chain({"0", "1"});
  FrameSurjection qp(pointed_at(c, 2), pointed_at(two, 1), {0, 0, 1});
  FrameReal inf(qp.source(), {{ExtRational::pos_infinity(), c->top()}}, FrameReal::Kind::extended);
  auto refused = drop(qp, inf);
  CHECK_FALSE(refused.dropped);
  CHECK(refused.condition == 0);
  CHECK(refused.reason == "q(h'(-inf, inf)) = 0, not top");
}

TEST_CASE("e0q membership") {
  F4 x;
  auto id = FrameSurjection::pointed(identity_quotient(x.f), x.a);
  auto r = e0q_member(id, x.chi_b());
  CHECK(r.member);
  CHECK(*r.witness == x.chi_b());
  CHECK(r.method == "adjoint candidate");

  auto qb = c3_boolean();
  auto z = e0q_member(qb, FrameReal::zero(qb.target()));
  CHECK(z.member);
  CHECK(*z.witness == FrameReal::zero(qb.source()));

  // C3 x F2 -> F2 x F2, (x, y) |-> (x**, y), point in the first factor.
  auto f2 = chain({"0", "1"});
  auto pq = product_quotient(booleanization(c3()), identity_quotient(f2));
  const auto& t = *pq.target;
  const Elem first = t.index_of("(top,0)").value(), second = t.index_of("(bot,1)").value();
  auto s = FrameSurjection::pointed(pq, first);
  CHECK(s.dense());
  auto h = chi(s.target(), second);
  auto e = e0q_member(s, h);
  REQUIRE(e.member);
  CHECK(e.method == "adjoint candidate");
  const auto& src = s.source()->frame();
  CHECK(e.witness->cells() ==
        std::vector<Cell>{{Rational(0), src.index_of("(top,0)").value()}, {Rational(1), src.index_of("(bot,1)").value()}});
  auto ex = e0q_exhaustive(s, h);
  CHECK(ex.member);
  CHECK(*ex.witness == *e.witness);

  FrameSurjection qp(pointed_at(c3(), 2), pointed_at(f2, 1), {0, 0, 1});
  CHECK_THROWS_AS(e0q_member(qp, FrameReal::zero(qp.target())), PreconditionError);
}

TEST_CASE("frame pointwise sup and dini") {
  F4 x;
  auto s = frame_pointwise_sup({x.chi_b(), FrameReal::zero(x.pf)});
  CHECK(s.verified);
  CHECK(s.sup == x.chi_b());
  auto g = induced_op(Op::scale(q("3/2")), x.chi_b());
  CHECK(frame_pointwise_sup({g, g, g}).sup == g);

  std::vector<FrameReal> seq;
  for (int n = 1; n <= 4; ++n) seq.push_back(induced_op(Op::scale(Rational(1, n)), x.chi_b()));
  seq.push_back(FrameReal::zero(x.pf));
  auto d = frame_dini(seq);
  CHECK(d.pointwise_to_zero);
  CHECK(d.uniform);
  CHECK(d.index_for(q("1/3")) == 4u);
  CHECK(d.index_for(q("2")) == 1u);

  auto stuck = frame_dini({x.chi_b(), x.chi_b()});
  CHECK_FALSE(stuck.pointwise_to_zero);
  CHECK_FALSE(stuck.index_for(q("1/2")).has_value());
  CHECK_THROWS_AS(frame_dini({FrameReal::zero(x.pf), x.chi_b()}), PreconditionError);
}

TEST_CASE("downset frames") {
  auto f = downsets(3, {{0, 2}, {1, 2}});
  CHECK(f->size() == 5);
  CHECK_THROWS_AS(downsets(6, {}), PreconditionError);
}
