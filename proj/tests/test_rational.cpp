#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "ut/rational.hpp"
#include "ut/rng.hpp"

using ut::Rational;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
  CHECK(Rational(2, 4).str() == "1/2");
  CHECK(Rational(-2, 4).str() == "-1/2");
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(-2, -4).str() == "1/2");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK(Rational(6).str() == "6/1");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("from_string accepts fractions, integers and decimals") {
  CHECK(Rational::from_string("3/9") == Rational(1, 3));
  CHECK(Rational::from_string("-7") == Rational(-7));
  CHECK(Rational::from_string("  5/10 ") == Rational(1, 2));
  CHECK(Rational::from_string("0.25") == Rational(1, 4));
  CHECK(Rational::from_string("-1.25") == Rational(-5, 4));
  CHECK(Rational::from_string("2.") == Rational(2));
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("x/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.2.3"), std::invalid_argument);
}

TEST_CASE("field arithmetic on random values") {
  ut::Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    const Rational a = rng.rational(50, 20), b = rng.rational(50, 20),
                   c = rng.nonzero_rational(50, 20);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a / c) * c == a);
    CHECK(a - a == Rational(0));
    CHECK(a + (-a) == Rational(0));
  }
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("ordering is consistent with subtraction sign") {
  ut::Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    const Rational a = rng.rational(30, 12), b = rng.rational(30, 12);
    CHECK((a < b) == ((a - b).sign() < 0));
    CHECK((a == b) == ((a - b).is_zero()));
    CHECK((a > b) == ((a - b).sign() > 0));
  }
}

TEST_CASE("floor and frac") {
  CHECK(Rational(7, 2).floor() == Rational(3));
  CHECK(Rational(-7, 2).floor() == Rational(-4));
  CHECK(Rational(-3).floor() == Rational(-3));
  ut::Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Rational a = rng.rational(60, 17);
    const Rational fr = a.frac();
    CHECK(a.floor() + fr == a);
    CHECK(fr >= Rational(0));
    CHECK(fr < Rational(1));
  }
}

TEST_CASE("pow handles negative exponents and rejects 0^-k") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(Rational(0).pow(4) == Rational(0));
  CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("abs and to_double") {
  CHECK(abs(Rational(-3, 4)) == Rational(3, 4));
  CHECK(Rational(1, 4).to_double() == doctest::Approx(0.25));
  CHECK(Rational(-5, 2).to_double() == doctest::Approx(-2.5));
}
