#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdint>

#include "mlgt/errors.hpp"
#include "mlgt/rational.hpp"

using mlgt::Rational;

TEST_CASE("construction normalizes sign and gcd", "[rational]") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, -4) == Rational(1, 2));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(0, -7) == Rational(0));
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).num() == 2);
  CHECK_THROWS_AS(Rational(1, 0), mlgt::ParameterError);
}

TEST_CASE("arithmetic is exact", "[rational]") {
  Rational a(1, 3), b(1, 6);
  CHECK(a + b == Rational(1, 2));
  CHECK(a - b == Rational(1, 6));
  CHECK(a * b == Rational(1, 18));
  CHECK(a / b == Rational(2));
  CHECK(-a == Rational(-1, 3));
  CHECK_THROWS_AS(a / Rational(0), mlgt::ParameterError);
  // 1/3 + 1/3 + 1/3 == 1 exactly, unlike doubles.
  CHECK(a + a + a == Rational(1));
}

TEST_CASE("overflow is detected, not wrapped", "[rational]") {
  Rational big(INT64_MAX, 1);
  CHECK_THROWS_AS(big + big, mlgt::NumericalError);
  CHECK_THROWS_AS(big * Rational(2), mlgt::NumericalError);
  // __int128 intermediates keep legitimate large results alive.
  Rational r = Rational(INT64_MAX, 2) * Rational(2, INT64_MAX);
  CHECK(r == Rational(1));
}

TEST_CASE("ordering", "[rational]") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(-1, 3));
  CHECK(Rational(5, 10) <= Rational(1, 2));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(-7, 2) >= Rational(-4));
}

TEST_CASE("floor handles negatives", "[rational]") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-6, 2).floor() == -3);
  CHECK(Rational(0).floor() == 0);
}

TEST_CASE("string round trip", "[rational]") {
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-3, 4).str() == "-3/4");
  CHECK(Rational(5).str() == "5");
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-12") == Rational(-12));
  CHECK(Rational::parse("-9/-6") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::parse("x"), mlgt::ParameterError);
  CHECK_THROWS_AS(Rational::parse("1/0"), mlgt::ParameterError);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), mlgt::ParameterError);
  CHECK_THROWS_AS(Rational::parse("1.5"), mlgt::ParameterError);
}

TEST_CASE("to_double", "[rational]") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(-11, 4).to_double() == -2.75);
}

TEST_CASE("continued fraction recovery from doubles", "[rational]") {
  auto half = Rational::approximate(0.5);
  REQUIRE(half.has_value());
  CHECK(*half == Rational(1, 2));

  auto third = Rational::approximate(1.0 / 3.0);
  REQUIRE(third.has_value());
  CHECK(*third == Rational(1, 3));

  auto neg = Rational::approximate(-2.75);
  REQUIRE(neg.has_value());
  CHECK(*neg == Rational(-11, 4));

  auto milan = Rational::approximate(355.0 / 113.0);
  REQUIRE(milan.has_value());
  CHECK(*milan == Rational(355, 113));

  // Default tolerance admits the classical convergent of pi...
  auto pi_fit = Rational::approximate(3.14159265358979323846);
  REQUIRE(pi_fit.has_value());
  CHECK(*pi_fit == Rational(1146408, 364913));
  // ...but a tighter denominator cap leaves nothing close enough.
  CHECK_FALSE(Rational::approximate(3.14159265358979323846, 300000, 1e-12).has_value());
  CHECK_FALSE(Rational::approximate(std::nan("")).has_value());
}
