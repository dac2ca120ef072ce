#include <doctest.h>

#include "helpers.hpp"
#include "trunclab/error.hpp"
#include "trunclab/trunc/analysis.hpp"
#include "trunclab/trunc/sequences.hpp"
#include "trunclab/trunc/simple_trunc.hpp"

using namespace trunclab;
using namespace trunclab::trunc;
using namespace testing_helpers;
using boolean::make_space;

namespace {

// Points 1..3 of X3 sit at indices 1..3.
Subset pts(std::initializer_list<std::size_t> ps) {
  Subset s;
  for (auto p : ps) s = s.with(p);
  return s;
}

std::vector<Subset> split_family() { return {Subset(), pts({1, 2}), pts({3}), pts({1, 2, 3})}; }

}  // namespace

TEST_CASE("apply_op on X3") {
  auto s = x3();
  CHECK(truncate(el(s, {"2", "1/2", "0"})) == el(s, {"1", "1/2", "0"}));
  CHECK(tminus(el(s, {"2", "1/2", "0"}), 1) == el(s, {"1", "0", "0"}));
  CHECK(truncN(el(s, {"5", "2", "1/3"}), 2) == el(s, {"2", "2", "1/3"}));
  CHECK(meet(el(s, {"1", "-1", "0"}), el(s, {"0", "0", "2"})) == el(s, {"0", "-1", "0"}));
  CHECK_THROWS_AS(truncate(el(s, {"-1", "0", "0"})), PreconditionError);
  CHECK_THROWS_AS(el(s, {"1", "0", "0"}) + SimpleElement(make_space({"*", "1"}, "*")), PreconditionError);
  CHECK_THROWS_AS(SimpleElement(s, {q("1"), q("0"), q("0"), q("0")}), InvariantError);
}

TEST_CASE("membership") {
  auto s = x3();
  CHECK(member(lc(s), el(s, {"7/2", "-1", "0"})).member);
  SimpleTrunc t(s, split_family());
  auto yes = member(t, el(s, {"3", "3", "1/2"}));
  CHECK(yes.member);
  CHECK(yes.normal_form == std::vector<NormalTerm>{{q("3"), pts({1, 2})}, {q("1/2"), pts({3})}});
  auto no = member(t, el(s, {"1", "0", "0"}));
  CHECK_FALSE(no.member);
  CHECK(no.offending_level_set == pts({1}));
}

TEST_CASE("unital components") {
  auto s = x3();
  CHECK(is_unital_component(el(s, {"1", "1", "0"})));
  CHECK_FALSE(is_unital_component(el(s, {"1", "1/2", "0"})));
  CHECK(is_unital_component(SimpleElement(s)));
}

TEST_CASE("uc and lc") {
  auto s = x3();
  auto full = uc(lc(s));
  CHECK(full.size() == 8);
  CHECK(boolean::gba_validate(full).valid());
  CHECK(uc(lc(make_space({"*"}, "*"))).size() == 1);
  auto split = uc(SimpleTrunc(s, split_family()));
  CHECK(split.size() == 4);
  CHECK(boolean::gba_validate(split).valid());

  CHECK(lc(s).dimension() == 3);
  CHECK(lc(make_space({"*"}, "*")).dimension() == 0);
  CHECK(lc(s, split_family()).dimension() == 2);
  CHECK_THROWS_WITH_AS(lc(s, std::vector<Subset>{Subset(), pts({1}), pts({2})}),
                       "family not closed: {1} union {2} = {1,2} is missing", InvariantError);
}

TEST_CASE("normal form and clearance") {
  auto s = x3();
  auto g = el(s, {"3", "3", "1/2"});
  CHECK(normal_form(g) == std::vector<NormalTerm>{{q("3"), pts({1, 2})}, {q("1/2"), pts({3})}});
  CHECK(normal_form(SimpleElement(s)).empty());
  CHECK(normal_form(el(s, {"1", "1", "1"})) == std::vector<NormalTerm>{{q("1"), pts({1, 2, 3})}});
  CHECK(from_normal_form(s, normal_form(g)) == g);

  CHECK(clearance(g) == q("1/2"));
  CHECK(clearance(SimpleElement(s)) == 0);
  CHECK(clearance(el(s, {"1", "1", "0"})) == 1);
}

TEST_CASE("clearance steps") {
  auto s = x3();
  auto a = clearance_step(el(s, {"1", "1", "1/2"}));
  CHECK(a.rest == el(s, {"1", "1", "0"}));
  CHECK(a.component == el(s, {"0", "0", "1"}));
  CHECK(a.delta == q("1/2"));

  auto b = clearance_step(el(s, {"1", "1", "0"}));
  CHECK(b.rest.is_zero());
  CHECK(b.component == el(s, {"1", "1", "0"}));
  CHECK(b.delta == 1);

  auto c = clearance_step(el(s, {"1", "1/2", "1/4"}));
  CHECK(c.rest == el(s, {"1", "1/2", "0"}));
  CHECK(c.component == el(s, {"0", "0", "1"}));
  CHECK(c.delta == q("1/4"));
}

TEST_CASE("good sequences") {
  auto s = x3();
  auto g = el(s, {"5", "2", "1/3"});
  auto f = good_from_element(g);
  REQUIRE(f.terms.size() == 5);
  CHECK(f.terms[0] == el(s, {"1", "1", "1/3"}));
  CHECK(f.terms[1] == el(s, {"1", "1", "0"}));
  for (std::size_t i = 2; i < 5; ++i) CHECK(f.terms[i] == el(s, {"1", "0", "0"}));
  CHECK(element_from_good(f) == g);
  CHECK(check_good_sequence(f).ok);

  CHECK(good_from_element(SimpleElement(s)).terms.empty());
  CHECK(good_from_element(el(s, {"1", "0", "0"})).terms.size() == 1);
  CHECK_THROWS_WITH_AS(good_from_element(g, 3), doctest::Contains("need m >= 5"), PreconditionError);

  CHECK(element_from_good(GoodSequence{s, {}}).is_zero());
  CHECK(element_from_good(GoodSequence{s, {el(s, {"1", "1", "0"}), el(s, {"1", "0", "0"})}}) ==
        el(s, {"2", "1", "0"}));
  GoodSequence bad{s, {el(s, {"1", "1/2", "0"}), el(s, {"1", "1/2", "0"})}};
  auto chk = check_good_sequence(bad);
  CHECK_FALSE(chk.ok);
  CHECK(chk.index == 1);
  CHECK_THROWS_AS(element_from_good(bad), InvariantError);
}

TEST_CASE("truncation sequences") {
  auto s = x3();
  std::vector<SimpleElement> seq = {el(s, {"1", "1", "1/3"}), el(s, {"2", "2", "1/3"}), el(s, {"3", "2", "1/3"}),
                                    el(s, {"4", "2", "1/3"}), el(s, {"5", "2", "1/3"})};
  auto ok = truncation_sequence_check(s, seq);
  CHECK(ok.ok);
  CHECK(ok.element == el(s, {"5", "2", "1/3"}));
  CHECK(truncation_sequence(el(s, {"5", "2", "1/3"})) == seq);

  auto one = truncation_sequence_check(s, {el(s, {"1", "0", "0"}), el(s, {"1", "0", "0"})});
  CHECK(one.ok);
  CHECK(one.element == el(s, {"1", "0", "0"}));

  auto bad = truncation_sequence_check(s, {el(s, {"1", "1", "0"}), el(s, {"2", "2", "0"}), el(s, {"2", "1", "0"})});
  CHECK_FALSE(bad.ok);
  CHECK(bad.index == 2);
}

TEST_CASE("boundedness") {
  auto s = x3();
  CHECK(is_bounded(el(s, {"5", "2", "1/3"})) == 5);
  CHECK(is_bounded(el(s, {"1", "1", "1/3"})) == 1);
  CHECK(is_bounded(SimpleElement(s)) == 1);

  auto a = bounded_away_from_zero(el(s, {"1", "1/2", "0"}));
  CHECK(a.bounded_away);
  CHECK(a.epsilon == q("1/2"));
  CHECK(a.component_check);
  CHECK_FALSE(bounded_away_from_zero(SimpleElement(s)).bounded_away);
  auto c = bounded_away_from_zero(el(s, {"1", "1", "1"}));
  CHECK(c.bounded_away);
  CHECK(c.epsilon == 1);
}

TEST_CASE("hyperarchimedean on the full trunc") {
  auto r = hyperarchimedean(lc(x3()), 200, 3);
  CHECK(r.verdict);
  CHECK(r.pairs_checked >= 200);
}

TEST_CASE("yosida quotient") {
  auto s = x3();
  auto a = yosida_quotient(s, {el(s, {"1", "1", "0"})});
  CHECK(a.quotient->size() == 2);
  CHECK(a.map[1] == a.map[2]);
  CHECK(a.map[3] == a.quotient->star());
  CHECK(a.map[0] == a.quotient->star());
  CHECK(a.map[1] != a.quotient->star());
  REQUIRE(a.generators.size() == 1);
  CHECK(a.generators[0].values() == std::vector<Rational>{q("0"), q("1")} );
  CHECK(a.separates);

  auto b = yosida_quotient(s, {el(s, {"1", "2", "3"})});
  CHECK(b.quotient->size() == 4);
  CHECK(yosida_quotient(s, {}).quotient->size() == 1);
}

TEST_CASE("pointwise sup and dini") {
  auto s = x3();
  auto sup = pointwise_sup({el(s, {"1", "0", "0"}), el(s, {"0", "1", "0"})});
  CHECK(sup == el(s, {"1", "1", "0"}));
  CHECK(is_pointwise_sup({el(s, {"1", "0", "0"}), el(s, {"0", "1", "0"})}, sup));
  Rational cut;
  CHECK_FALSE(is_pointwise_sup({el(s, {"1", "0", "0"})}, el(s, {"1", "1", "0"}), &cut));
  auto g = el(s, {"2", "1/3", "1"});
  CHECK(pointwise_sup({g}) == g);

  auto d = dini_check({el(s, {"1", "1", "1"}), el(s, {"1/2", "1/2", "1/2"}), SimpleElement(s), SimpleElement(s)});
  CHECK(d.pointwise_to_zero);
  CHECK(d.uniform);
  CHECK(d.index_for(q("1/4")) == 3u);
  CHECK_THROWS_AS(dini_check({el(s, {"0", "0", "0"}), el(s, {"1", "0", "0"})}), PreconditionError);
}
