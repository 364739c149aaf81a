#include <doctest.h>

#include "mintb/errors.hpp"
#include "mintb/gadgets.hpp"
#include "mintb/length_value.hpp"
#include "mintb/rational.hpp"

using namespace mintb;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("3/6")) == "1/2");
  CHECK(to_string(parse_rational("4/2")) == "2");
  CHECK(to_string(parse_rational("-8/6")) == "-4/3");
  CHECK(to_string(parse_rational("0")) == "0");
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("a/2"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
}

TEST_CASE("rational round trip on random values") {
  SplitMix64 rng(42);
  for (int i = 0; i < 500; ++i) {
    const long num = static_cast<long>(rng.below(20001)) - 10000;
    const long den = 1 + static_cast<long>(rng.below(999));
    const Rational r = rational(num, den);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("length values absorb infinity") {
  const LengthValue two{Rational(2)};
  const LengthValue five{Rational(5)};
  const LengthValue inf = LengthValue::infinity();

  CHECK((two + five).value() == 7);
  CHECK((two + inf).is_infinite());
  CHECK((inf + inf).is_infinite());
  CHECK(inf > five);
  CHECK(five < inf);
  CHECK(inf == inf);
  CHECK(inf >= inf);
  CHECK(min(inf, five) == five);
  CHECK(max(two, five) == five);
  CHECK(max(two, inf).is_infinite());
  CHECK(to_string(inf) == "inf");
  CHECK(to_string(five) == "5");
}
