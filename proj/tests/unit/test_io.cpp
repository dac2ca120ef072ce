#include <doctest.h>

#include "trunclab/error.hpp"
#include "trunclab/io/instance.hpp"
#include "trunclab/io/report.hpp"

using namespace trunclab;
using namespace trunclab::io;

namespace {

std::string first_error(const ParseResult& r) { return r.errors.empty() ? "" : r.errors[0].to_string(); }

}  // namespace

TEST_CASE("X3 with one element") {
  auto r = parse_instance_text("space X3 points * 1 2 3 star *\nelement g on X3 = 1:5 2:2 3:1/3\n");
  REQUIRE(r.ok());
  CHECK(r.instance->size() == 2);
  CHECK(r.instance->find<boolean::SpacePtr>("X3"));
  const auto* g = r.instance->find<trunc::SimpleElement>("g");
  REQUIRE(g);
  CHECK(g->tuple_string() == "(5,2,1/3)");
}

TEST_CASE("star outside the points") {
  auto r = parse_instance_text("\nspace X points a b star c\n");
  REQUIRE(r.errors.size() == 1);
  CHECK(r.errors[0].line == 2);
  CHECK(r.errors[0].object == "X");
  CHECK(r.errors[0].message.find("star not in points") != std::string::npos);
}

TEST_CASE("non-closed family names the missing set") {
  auto r = parse_instance_text(
      "space X points * 1 2 star *\n"
      "trunc G on X sets {} {1} {2}\n");
  REQUIRE_FALSE(r.ok());
  CHECK(r.errors[0].line == 2);
  CHECK(r.errors[0].message.find("{1,2}") != std::string::npos);
}

TEST_CASE("located errors") {
  auto r = parse_instance_text(
      "space X points * 1 star *\n"
      "element g on Y = 1:1\n"
      "element h on X = 1:1/0\n"
      "bogus thing\n"
      "space X points * star *\n"
      "frame N elements 0 a b c 1 covers 0<a 0<b 0<c a<1 b<1 c<1\n"
      "tail t = {correction: [1:1], tail: [1\n");
  REQUIRE(r.errors.size() == 6);
  CHECK(first_error(r) == "line 2: g: unresolved reference 'Y'");
  CHECK(r.errors[1].line == 3);
  CHECK(r.errors[2].message == "unknown statement 'bogus'");
  CHECK(r.errors[3].message == "duplicate name 'X'");
  CHECK(r.errors[4].line == 6);
  CHECK(r.errors[5].message.find("unbalanced") != std::string::npos);
  CHECK_FALSE(r.instance);
}

TEST_CASE("sample file parses and round-trips") {
  auto r = parse_instance(TRUNCLAB_TEST_DATA "/sample.tl");
  INFO(first_error(r));
  REQUIRE(r.ok());
  const auto& inst = *r.instance;
  CHECK(inst.find<Family>("comps")->sets.size() == 4);
  CHECK(inst.find<trunc::SimpleTrunc>("G")->dimension() == 2);
  CHECK(inst.find<Gba>("B")->algebra.size() == 4);
  CHECK(inst.find<frame::FrameSurjection>("q")->dense());
  CHECK(inst.find<seq::TailElement>("t")->to_string() == "{correction: [1:-2, 2:-1/2], tail: [3]}");
  CHECK(inst.find<Sequence>("ts")->stable);
  CHECK(std::get<kernel::SeqKernel>(inst.find<Kernel>("F")->spec).support()->size() == 2);

  auto text = serialize(inst);
  auto again = parse_instance_text(text);
  INFO(text);
  INFO(first_error(again));
  REQUIRE(again.ok());
  CHECK(*again.instance == inst);
  CHECK(serialize(*again.instance) == text);
}

TEST_CASE("parse_tail and parse_interval") {
  CHECK(parse_tail("{correction: [], tail: []}").is_zero());
  CHECK(parse_tail("{correction: [2:1/2], tail: [0, 1]}").degree() == 2);
  CHECK_THROWS_AS(parse_tail("{tail: [1]}"), StructuralError);
  auto u = parse_interval("(-inf,1/2)");
  CHECK(u.lo == ExtRational::neg_infinity());
  CHECK(u.hi == ExtRational(Rational(1, 2)));
  CHECK_THROWS_AS(parse_interval("(1,1)"), StructuralError);
  CHECK_THROWS_AS(parse_interval("(inf,2)"), StructuralError);
}

TEST_CASE("report") {
  Report rep("normal-form g");
  rep.line("g = (3, 3, 1/2)");
  rep.value("terms", std::string("[(3,{1,2}), (1/2,{3})]"));
  rep.value("count", std::int64_t{2});
  rep.check("reconstructs", true);
  CHECK(rep.exit_code() == 0);
  CHECK(rep.json().find("\"count\": 2") != std::string::npos);
  rep.check("disjoint", false, "{1}");
  CHECK(rep.exit_code() == 1);
  CHECK(rep.human().find("FAIL disjoint  [{1}]") != std::string::npos);
}
