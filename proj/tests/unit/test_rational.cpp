#include <doctest.h>

#include "trunclab/error.hpp"
#include "trunclab/op.hpp"
#include "trunclab/rational.hpp"

using namespace trunclab;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational(" -2 ")) == "-2");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), StructuralError);
  CHECK_THROWS_AS(parse_rational("1/-2"), StructuralError);
  CHECK_THROWS_AS(parse_rational("abc"), StructuralError);
  CHECK_THROWS_AS(parse_rational(""), StructuralError);
  CHECK_THROWS_AS(parse_rational("1.5"), StructuralError);
}

TEST_CASE("floor and ceil") {
  CHECK(floor(parse_rational("-1/2")) == -1);
  CHECK(ceil(parse_rational("-1/2")) == 0);
  CHECK(ceil(parse_rational("7/3")) == 3);
  CHECK(ceil_to_int(parse_rational("5")) == 5);
}

TEST_CASE("extended rationals order infinities around the finite values") {
  auto lo = ExtRational::neg_infinity();
  auto hi = ExtRational::pos_infinity();
  ExtRational mid(parse_rational("1/3"));
  CHECK(lo < mid);
  CHECK(mid < hi);
  CHECK(parse_ext_rational("-inf") == lo);
  CHECK(parse_ext_rational("+inf") == hi);
  CHECK(to_string(hi) == "inf");
  CHECK(to_string(parse_ext_rational("2/4")) == "1/2");
}

TEST_CASE("op tags") {
  CHECK(parse_op("scale:2") == Op::scale(2));
  CHECK(parse_op("tminus:1/2") == Op::tminus(Rational(1, 2)));
  CHECK(to_string(parse_op("truncN:3")) == "truncN:3");
  CHECK_THROWS_AS(parse_op("tminus"), StructuralError);
  CHECK_THROWS_AS(parse_op("meet:1"), StructuralError);
  CHECK_THROWS_AS(parse_op("tminus:-1"), PreconditionError);
  CHECK_THROWS_AS(parse_op("truncN:0"), PreconditionError);
  CHECK_THROWS_AS(parse_op("multiply"), StructuralError);
  const Rational args[] = {Rational(2), Rational(1, 2)};
  CHECK(apply_scalar(Op::meet(), args) == Rational(1, 2));
  CHECK(apply_scalar(Op::tminus(1), std::span(args, 1)) == 1);
  CHECK(apply_scalar(Op::truncate(), std::span(args, 1)) == 1);
}
