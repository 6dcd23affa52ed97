#include "cflp/rational.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <stdexcept>

using cflp::Rational;

TEST_CASE("rational stays in lowest terms") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.str() == "-3/2");
  CHECK(Rational(4, 2).str() == "2");
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(Rational::parse("1/2") == Rational(1, 2));
  CHECK(Rational::parse(" -3/9 ") == Rational(-1, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("+5/10") == Rational(1, 2));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Rational::parse("2/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(3, 2).floor() == 1);
  CHECK(Rational(3, 2).ceil() == 2);
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(2).ceil() == 2);
}

TEST_CASE("from_double is exact") {
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(0.1).to_double() == 0.1);
}

TEST_CASE("pochhammer and falling products") {
  CHECK(cflp::pochhammer(Rational(1, 2), 3) == Rational(15, 8));
  CHECK(cflp::pochhammer(Rational(-2), 3) == Rational(0));
  CHECK(cflp::falling_product(Rational(2), 3) == Rational(0));
  CHECK(cflp::falling_product(Rational(5, 2), 2) == Rational(15, 4));
  CHECK(cflp::factorial(10) == 3628800);
}

TEST_CASE("field axioms hold on random rationals") {
  cflp::testing::Gen gen(11);
  for (int i = 0; i < 200; ++i) {
    const Rational a = gen.small_rational();
    const Rational b = gen.small_rational();
    const Rational c = gen.small_rational();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b - b == a);
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}
