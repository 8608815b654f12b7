// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "gjms/rational.hpp"

using gjms::Rational;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a - b).str() == "1/6");
  CHECK((a * b).str() == "1/18");
  CHECK((a / b) == Rational(2));
  CHECK(Rational(4, -6).str() == "-2/3");
  CHECK(Rational(6, 3).isInteger());
  CHECK(Rational(-2, 3).sign() == -1);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-5, 7).abs() == Rational(5, 7));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3") == Rational(3));
  CHECK(Rational::parse("-3/12") == Rational(-1, 4));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("division by zero is rejected") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
}

TEST_CASE("factorials and binomials") {
  CHECK(gjms::factorial(0) == Rational(1));
  CHECK(gjms::factorial(10) == Rational(3628800));
  CHECK(gjms::binomial(9, 4) == Rational(126));
  CHECK(gjms::binomial(3, 5) == Rational(0));
  CHECK(gjms::binomial(3, -1) == Rational(0));
}
