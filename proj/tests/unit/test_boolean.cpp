#include <doctest.h>

#include <algorithm>

#include "trunclab/boolean/algebra.hpp"
#include "trunclab/boolean/equivalence.hpp"
#include "trunclab/error.hpp"

using namespace trunclab;
using namespace trunclab::boolean;

namespace {

// Labels "{}", "{1}", ... for subsets of points named 1..n (bit i = point i+1).
std::string set_label(Subset s) {
  std::string out = "{";
  for (auto i : s.indices()) out += (out.size() > 1 ? "," : "") + std::to_string(i + 1);
  return out + "}";
}

std::vector<Subset> powerset_family(std::size_t n) {
  std::vector<Subset> f;
  for (std::uint64_t m = 0; m < (1U << n); ++m) f.emplace_back(m);
  return f;
}

GeneralizedBooleanAlgebra powerset_gba(std::size_t n) {
  return GeneralizedBooleanAlgebra::from_family(powerset_family(n), set_label);
}

std::size_t idx(const GeneralizedBooleanAlgebra& a, const std::string& l) { return a.index_of(l).value(); }
std::size_t idx(const BooleanAlgebra& a, const std::string& l) { return a.index_of(l).value(); }

bool has_law(const ValidationReport& r, const std::string& law) {
  return std::any_of(r.violations.begin(), r.violations.end(), [&](const Violation& v) { return v.law == law; });
}

}  // namespace

TEST_CASE("powerset difference is a valid gBa") {
  auto a = powerset_gba(2);
  CHECK(gba_validate(a).valid());
  CHECK(a.label(gba_diff(a, idx(a, "{1,2}"), idx(a, "{2}"))) == "{1}");
  CHECK(a.label(gba_diff(a, idx(a, "{1}"), idx(a, "{1,2}"))) == "{}");
  for (std::size_t x = 0; x < a.size(); ++x) CHECK(gba_diff(a, x, a.bottom()) == x);
}

TEST_CASE("redefined difference is caught with its witness") {
  auto a = powerset_gba(2);
  auto diff = a.diff_table();
  const auto top = idx(a, "{1,2}"), one = idx(a, "{1}");
  diff[top][one] = top;
  GeneralizedBooleanAlgebra bad(a.labels(), a.join_table(), a.meet_table(), a.bottom(), diff);
  auto r = gba_validate(bad);
  REQUIRE(has_law(r, "diff meet equation"));
  auto v = *std::find_if(r.violations.begin(), r.violations.end(),
                         [](const Violation& x) { return x.law == "diff meet equation"; });
  CHECK(v.witness == std::vector<std::size_t>{top, one});
}

TEST_CASE("three-element chain has no relative complement of m in top") {
  // bottom < m < top; a \ b is bottom when a <= b, else a.
  Table join = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
  Table meet = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
  Table diff = {{0, 0, 0}, {1, 0, 0}, {2, 2, 0}};
  GeneralizedBooleanAlgebra chain({"bot", "m", "top"}, join, meet, 0, diff);
  auto r = gba_validate(chain);
  CHECK_FALSE(r.valid());
  auto it = std::find_if(r.violations.begin(), r.violations.end(),
                         [](const Violation& x) { return x.law == "diff existence"; });
  REQUIRE(it != r.violations.end());
  CHECK(it->witness == std::vector<std::size_t>{2, 1});
  CHECK(it->detail == "no c for a=top, b=m");
  CHECK_FALSE(has_law(r, "distributivity"));
}

TEST_CASE("non-total tables are structural errors") {
  Table short_table = {{0, 1}, {1}};
  Table ok = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(GeneralizedBooleanAlgebra({"a", "b"}, short_table, ok, 0, ok), StructuralError);
  Table out_of_range = {{0, 5}, {1, 1}};
  CHECK_THROWS_AS(GeneralizedBooleanAlgebra({"a", "b"}, out_of_range, ok, 0, ok), StructuralError);
}

TEST_CASE("non-closed family names the missing set") {
  std::vector<Subset> fam = {Subset(0), Subset(1), Subset(2)};
  CHECK_THROWS_WITH_AS(GeneralizedBooleanAlgebra::from_family(fam, set_label),
                       "family not closed: {1} union {2} = {1,2} is missing", InvariantError);
}

TEST_CASE("idealize follows the operation table") {
  auto a = powerset_gba(2);
  auto bi = idealize(a);
  const auto& b = bi.algebra;
  CHECK(b.size() == 8);
  CHECK(iba_validate(bi).valid());
  // {1} v {2}' = ({2} \ {1})' = {2}'
  CHECK(b.label(b.join(idx(b, "{1}"), idx(b, "{2}'"))) == "{2}'");
  // {1}' ^ {2}' = ({1} v {2})'
  CHECK(b.label(b.meet(idx(b, "{1}'"), idx(b, "{2}'"))) == "{1,2}'");
  // {1,2} ^ {1}' = {1,2} \ {1}
  CHECK(b.label(b.meet(idx(b, "{1,2}"), idx(b, "{1}'"))) == "{2}");
  CHECK(b.label(b.top()) == "{}'");
  CHECK(b.complement(idx(b, "{1}")) == idx(b, "{1}'"));
}

TEST_CASE("idealize of the trivial gBa is the two-element algebra") {
  GeneralizedBooleanAlgebra triv({"0"}, {{0}}, {{0}}, 0, {{0}});
  auto bi = idealize(triv);
  CHECK(bi.algebra.size() == 2);
  CHECK(iba_validate(bi).valid());
  CHECK(bi.algebra.label(bi.algebra.top()) == "0'");
}

TEST_CASE("idealize of powerset of three points passes exhaustive Boolean checks") {
  auto bi = idealize(powerset_gba(3));
  CHECK(bi.algebra.size() == 16);
  CHECK(boolean_validate(bi.algebra).valid());
  CHECK(iba_validate(bi).valid());
}

TEST_CASE("prime tags never collide with existing labels") {
  GeneralizedBooleanAlgebra a({"x", "x'"}, {{0, 1}, {1, 1}}, {{0, 0}, {0, 1}}, 0, {{0, 0}, {1, 0}});
  auto bi = idealize(a);
  CHECK(bi.algebra.labels() == std::vector<std::string>{"x", "x'", "x''", "x'''"});
}

TEST_CASE("forgetting the algebra recovers the gBa") {
  auto a = powerset_gba(2);
  auto back = iba_forget(idealize(a));
  CHECK(gba_validate(back).valid());
  std::vector<std::size_t> identity(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) identity[i] = back.index_of(a.label(i)).value();
  CHECK(check_gba_isomorphism(a, back, identity).ok);

  GeneralizedBooleanAlgebra triv({"0"}, {{0}}, {{0}}, 0, {{0}});
  CHECK(iba_forget(idealize(triv)).size() == 1);
}

TEST_CASE("subsets of {p,q} inside powerset({p,q,r}) form a copy of powerset({p,q})") {
  auto x = make_space({"p", "q", "r"}, "r");
  auto bi = clopen(*x);
  auto forgotten = iba_forget(bi);
  CHECK(forgotten.size() == 4);
  auto target = powerset_gba(2);
  bool exhausted = false;
  CHECK(find_gba_isomorphism(forgotten, target, 8, &exhausted).has_value());
  CHECK(exhausted);
}

TEST_CASE("stone picks the atom outside the ideal") {
  auto x = make_space({"p", "q", "r"}, "r");
  auto s = stone(clopen(*x));
  CHECK(s.size() == 3);
  CHECK(s.star_label() == "{r}");

  auto s2 = stone(idealize(powerset_gba(2)));
  CHECK(s2.size() == 3);
  CHECK(s2.star_label() == "{1,2}'");
  CHECK(s2.index_of("{1}").has_value());
  CHECK(s2.index_of("{2}").has_value());

  GeneralizedBooleanAlgebra triv({"0"}, {{0}}, {{0}}, 0, {{0}});
  auto one = stone(idealize(triv));
  CHECK(one.size() == 1);
  CHECK(one.star_label() == "0'");
}

TEST_CASE("stone rejects a non-maximal ideal") {
  auto bi = clopen(*make_space({"p", "q", "r"}, "r"));
  // Only the empty set: a proper ideal, but not maximal.
  std::fill(bi.ideal.begin(), bi.ideal.end(), false);
  bi.ideal[0] = true;
  CHECK_THROWS_AS(stone(bi), InvariantError);
}

TEST_CASE("clopen unfolds the definition") {
  auto bi = clopen(*make_space({"*", "1", "2"}, "*"));
  CHECK(bi.algebra.size() == 8);
  std::vector<std::string> ideal;
  for (std::size_t i = 0; i < bi.algebra.size(); ++i) {
    if (bi.in_ideal(i)) ideal.push_back(bi.algebra.label(i));
  }
  CHECK(ideal == std::vector<std::string>{"{}", "{1}", "{2}", "{1,2}"});
  auto one = clopen(*make_space({"*"}, "*"));
  CHECK(one.algebra.size() == 2);
  CHECK(std::count(one.ideal.begin(), one.ideal.end(), true) == 1);
  auto x = make_space({"*", "1", "2"}, "*");
  CHECK(find_pointed_bijection(*x, stone(clopen(*x))).has_value());
}

TEST_CASE("pointed space invariants") {
  CHECK_THROWS_WITH_AS(make_space({"a", "b"}, "c"), "star not in points ('c')", InvariantError);
  CHECK_THROWS_AS(make_space({"a", "a"}, "a"), InvariantError);
}

TEST_CASE("equivalence witnesses on small spaces") {
  for (auto pts : {std::vector<std::string>{"*"}, std::vector<std::string>{"*", "1", "2"},
                   std::vector<std::string>{"*", "1", "2", "3", "4"}}) {
    auto report = equivalence_witness(make_space(pts, "*"));
    CHECK(report.complete);
    CHECK(report.round_trips.size() == 3);
    CHECK(report.all_verified());
  }
  std::vector<std::string> big = {"*", "1", "2", "3", "4", "5", "6"};
  CHECK_FALSE(equivalence_witness(make_space(big, "*")).complete);
}
