// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "gjms/poly.hpp"
#include "gjms/polytools.hpp"

using gjms::Poly;
using gjms::Rational;

TEST_CASE("polynomial ring operations") {
  Poly n = Poly::variable("n"), l = Poly::variable("lambda");
  Poly p = (n + l) * (n - l);
  CHECK(p == n * n - l * l);
  CHECK(Poly().str() == "0");
  CHECK((p - p).isZero());
  CHECK(p.degree(gjms::varId("n")) == 2);
  CHECK(p.totalDegree() == 2);
  CHECK(p.evaluate({{"n", Rational(3)}, {"lambda", Rational(1, 2)}}) == Rational(35, 4));
  CHECK(p.partialEvaluate({{"lambda", Rational(0)}}) == n * n);
  CHECK_THROWS(p.evaluate({{"n", Rational(1)}}));
}

TEST_CASE("derivative and substitution") {
  Poly x = Poly::variable("x");
  Poly p = x.pow(3) * Rational(2) + x;
  CHECK(p.derivative(gjms::varId("x")) == x * x * Rational(6) + Poly(1));
  CHECK(p.substitute(gjms::varId("x"), x + Poly(1)).evaluate(gjms::varId("x"), Rational(0)) == Rational(3));
}

TEST_CASE("exact division by a linear factor") {
  Poly x = Poly::variable("x");
  Poly p = (x - Poly(2)) * (x + Poly(Rational(1, 2)));
  CHECK(gjms::exactDivideByLinear(p, gjms::varId("x"), Rational(2)) == x + Poly(Rational(1, 2)));
  CHECK_THROWS(gjms::exactDivideByLinear(p, gjms::varId("x"), Rational(1)));
}

TEST_CASE("pi, eta and tau polynomials") {
  Poly x = Poly::variable("x");
  CHECK(gjms::buildPi(1) == x * (x + Poly(Rational(1, 2))));
  CHECK(gjms::buildEta(2) * x == gjms::buildPi(2));
  CHECK(gjms::buildTau(2) * (x + Poly(Rational(1, 2))) == gjms::buildPi(2));
  CHECK(gjms::buildB(3) == x * (x - Poly(1)) * (x - Poly(2)));
}
