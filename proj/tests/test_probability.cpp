#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hatgame/errors.hpp"
#include "hatgame/probability.hpp"

using namespace hatgame;

TEST_CASE("parse_rational reads fractions and decimals exactly") {
  CHECK(parse_rational("1/6") == Rational(1, 6));
  CHECK(parse_rational("0.7") == Rational(7, 10));
  CHECK(parse_rational(" 0.35 ") == Rational(7, 20));
  CHECK(parse_rational("2") == Rational(2));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E1") == Rational(25));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("0.5/1.5") == Rational(1, 3));
  CHECK_THROWS_AS(parse_rational("abc"), InvalidInput);
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
  CHECK_THROWS_AS(parse_rational(""), InvalidInput);
  CHECK_THROWS_AS(parse_rational("0,5"), InvalidInput);
}

TEST_CASE("probability vectors validate normalization") {
  const auto p = ProbabilityVector::parse("1/2,1/3,1/6");
  CHECK(p.is_exact());
  CHECK(p.size() == 3);
  CHECK(p[1] == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(ProbabilityVector::parse("0.5,0.4"), InvalidInput);
  CHECK_THROWS_AS(ProbabilityVector::parse("1.5,-0.5"), InvalidInput);
  CHECK_THROWS_AS(ProbabilityVector::from_doubles({0.5, 0.5 + 1e-9}), InvalidInput);
  CHECK_NOTHROW(ProbabilityVector::from_doubles({0.5, 0.5 + 1e-13}));
  CHECK_THROWS_AS(ProbabilityVector::from_doubles({1.0}), InvalidInput);
  const auto d = ProbabilityVector::from_doubles({0.7, 0.2, 0.1});
  CHECK_FALSE(d.is_exact());
  CHECK(ProbabilityVector::uniform(3).exact()[2] == Rational(1, 3));
}

TEST_CASE("formatting is locale-free with 15 significant digits") {
  CHECK(format_real(0.758) == "0.758");
  CHECK(format_real(1.0 / 3) == "0.333333333333333");
  CHECK(format_real(47.0 / 72) == "0.652777777777778");
  CHECK(format_rational(Rational(5, 9)) == "5/9");
  CHECK(format_rational(Rational(4)) == "4");
}
