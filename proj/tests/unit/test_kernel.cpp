#include <doctest.h>

#include "helpers.hpp"
#include "trunclab/error.hpp"
#include "trunclab/kernel/kernel.hpp"

using namespace trunclab;
using namespace trunclab::kernel;
using namespace testing_helpers;

namespace {

Subset pts(std::initializer_list<std::size_t> ps) {
  Subset s;
  for (auto p : ps) s = s.with(p);
  return s;
}

}  // namespace

TEST_CASE("support kernels on X3 satisfy all three conditions") {
  auto s = x3();
  auto t = trunc::lc(s);
  for (auto supp : {Subset(), pts({1}), pts({1, 2}), pts({1, 2, 3})}) {
    SimpleKernel k(t, supp);
    auto c = kernel_conditions(k, 200, 4);
    CHECK_MESSAGE(c.all_pass(), k.describe());
    auto p = pointwise_closed(k, 200, 4);
    CHECK(p.closed);
    CHECK(p.agrees_with_conditions);
  }
}

TEST_CASE("support normalization follows the component family") {
  auto s = x3();
  trunc::SimpleTrunc t(s, {Subset(), pts({1, 2}), pts({3}), pts({1, 2, 3})});
  SimpleKernel k(t, pts({1, 3}));
  CHECK(k.support() == pts({3}));
  CHECK(k.contains(el(s, {"0", "0", "4"})));
  CHECK_FALSE(k.contains(el(s, {"1", "1", "0"})));
}

TEST_CASE("simple premises") {
  auto s = x3();
  SimpleKernel k(trunc::lc(s), pts({1}));
  CHECK(tminus_premise(k, el(s, {"2", "0", "0"})));
  CHECK_FALSE(tminus_premise(k, el(s, {"2", "1/5", "0"})));
  CHECK(archimedean_premise(k, el(s, {"1", "0", "0"}), el(s, {"0", "1", "0"})));
  // (n g - h)+ picks up point 2 once n > 5.
  CHECK_FALSE(archimedean_premise(k, el(s, {"1", "1", "0"}), el(s, {"0", "5", "0"})));
}

TEST_CASE("tail-zero kernel fails condition 3 at g0") {
  auto k = SeqKernel::finite_support(seq::SeqTrunc(1));
  CHECK(k.describe() == "tail 0");
  auto c = kernel_conditions(k, 300, 2);
  CHECK(c.archimedean.pass);
  CHECK(c.truncation.pass);
  CHECK_FALSE(c.tminus.pass);
  CHECK(c.tminus.exact);
  CHECK(c.tminus.tail_witness == seq::g0());
  CHECK(tminus_premise(k, seq::g0()));
  CHECK_FALSE(k.contains(seq::g0()));

  auto p = pointwise_closed(k, 100, 2);
  CHECK_FALSE(p.closed);
  CHECK(p.tail_witness == seq::g0());
  CHECK(p.agrees_with_conditions);
}

TEST_CASE("whole trunc kernels pass everything") {
  auto k = SeqKernel::whole(seq::SeqTrunc(1));
  CHECK(kernel_conditions(k, 100, 1).all_pass());
  auto p = pointwise_closed(k, 100, 1);
  CHECK(p.closed);
  CHECK(p.agrees_with_conditions);
  CHECK(kernel_conditions(SimpleKernel(trunc::lc(x3()), pts({1, 2, 3})), 100, 1).all_pass());
}

TEST_CASE("tail slots must be upward closed") {
  CHECK_THROWS_AS(SeqKernel::from_flags(seq::SeqTrunc(2), std::nullopt, {true, false}), InvariantError);
  auto k = SeqKernel::from_flags(seq::SeqTrunc(2), std::nullopt, {false, true});
  CHECK(k.min_order() == 2);
  CHECK(k.contains(seq::TailElement::monomial(2)));
  CHECK_FALSE(k.contains(seq::g0()));
}

TEST_CASE("degree 2: tail 0 fails the archimedean condition") {
  // g = 1/n^2, h = 1/n: (n g - h)+ = 0 lies in K for every n, g does not.
  auto k = SeqKernel::finite_support(seq::SeqTrunc(2));
  CHECK(archimedean_premise(k, seq::TailElement::monomial(2), seq::g0()));
  auto c = kernel_conditions(k, 200, 9);
  CHECK_FALSE(c.archimedean.pass);
  CHECK(c.archimedean.exact);
}

TEST_CASE("closure") {
  auto s = x3();
  SimpleKernel one(trunc::lc(s), pts({1}));
  auto a = kernel_closure(one);
  CHECK(a.converged);
  CHECK(std::get<SimpleKernel>(a.closed) == one);
  CHECK(a.conditions_pass);

  SimpleKernel zero(trunc::lc(s), Subset());
  CHECK(std::get<SimpleKernel>(kernel_closure(zero).closed) == zero);

  auto fin = SeqKernel::finite_support(seq::SeqTrunc(1));
  auto b = kernel_closure(fin);
  CHECK(b.converged);
  CHECK(std::get<SeqKernel>(b.closed) == SeqKernel::whole(seq::SeqTrunc(1)));
  REQUIRE(b.stages.size() >= 2);
  CHECK(b.stages[0] == "tail 0");
  CHECK(b.stages[1] == "whole trunc");
  CHECK(b.conditions_pass);

  auto again = kernel_closure(b.closed);
  CHECK(std::get<SeqKernel>(again.closed) == std::get<SeqKernel>(b.closed));
}

TEST_CASE("filtration sups recover g") {
  CHECK(filtration_sup_check(seq::g0(), {0, q("1/5"), q("1/2"), 1}));
  CHECK(filtration_sup_check(seq::TailElement({{2, 3}}, {q("1/2"), 1}), {0, q("1/7"), 2}));
}
