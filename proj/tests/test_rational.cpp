#include <doctest.h>

#include "hradon/rational.hpp"

using hradon::Rational;

TEST_CASE("rationals normalize to lowest terms") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(2, 4).den() == 2);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ord2") {
  CHECK(Rational(12).ord2() == 2);
  CHECK(Rational(3, 2).ord2() == -1);
  CHECK(Rational(1).ord2() == 0);
  CHECK(Rational(1, 16).ord2() == -4);
  CHECK_THROWS_AS(Rational(0).ord2(), std::domain_error);
}

TEST_CASE("string round trip") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-5") == Rational(-5));
  CHECK(Rational(-7, 2).to_string() == "-7/2");
  CHECK(Rational(4).to_string() == "4");
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational big(INT64_MAX / 2, 1);
  CHECK_THROWS_AS(big * Rational(8), hradon::overflow_error);
}
