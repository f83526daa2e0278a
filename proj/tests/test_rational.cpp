#include <doctest.h>

#include <stdexcept>

#include "rational.hpp"

using namespace betti;

TEST_CASE("make_rational reduces to lowest terms with positive denominator") {
  CHECK(to_string(make_rational(3, 6)) == "1/2");
  CHECK(to_string(make_rational(-4, 8)) == "-1/2");
  CHECK(to_string(make_rational(5, -10)) == "-1/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(to_string(make_rational(12, 4)) == "3");
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("parse_rational accepts a and a/b only") {
  CHECK(parse_rational("26") == 26);
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("7/13") == make_rational(7, 13));
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 /2"), std::invalid_argument);
}

TEST_CASE("integer helpers") {
  CHECK(factorial_int(0) == 1);
  CHECK(factorial_int(12) == Integer("479001600"));
  CHECK(factorial_int(26) == Integer("403291461126605635584000000"));
  CHECK(binomial_int(6, 2) == 15);
  CHECK(binomial_int(4, 0) == 1);
  CHECK(binomial_int(4, -1) == 0);
  CHECK(binomial_int(3, 5) == 0);
  CHECK(is_integer(Rational(9)));
  CHECK_FALSE(is_integer(make_rational(9, 2)));
}
