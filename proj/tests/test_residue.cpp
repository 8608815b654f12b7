// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "gjms/residue.hpp"

using namespace gjms;

TEST_CASE("second order family in closed form") {
  // D_2(mu) = (2 mu + 1) P_2 - 2 mu Pbar_2.
  NCSum p = NCSum::single(Word::leftOnly({1})), pb = NCSum::single(Word::rightOnly({1}));
  MuPoly expected({p, p * Rational(2) - pb * Rational(2)});
  CHECK(buildClosed(1) == expected);
  CHECK(buildDirect(1) == expected);
  CHECK(buildClosed(1).evaluate(Rational(0)) == p);
  CHECK(buildClosed(1).evaluate(Rational(-1, 2)) == pb);
}

TEST_CASE("residue family checks through order 10") {
  for (int N = 1; N <= 5; ++N) {
    CAPTURE(N);
    CHECK(checkDirectEqualsClosed(N).passed());
    CHECK(checkConstantTerm(N).passed());
    CHECK(checkFactorizations(N).passed());
    CHECK(checkSigmaSymmetry(N).passed());
    CHECK(checkTopCoefficients(N).passed());
    CHECK(checkPiScalars(N).passed());
    CHECK(checkSumLemmas(N, 10, 3).passed());
  }
}

TEST_CASE("leading coefficient is the difference of building blocks") {
  for (int N = 1; N <= 4; ++N) {
    MuPoly d = buildClosed(N);
    CHECK(d.degree() <= 2 * N - 1);
    CHECK(residueScale(N) != Rational(0));
  }
  CHECK(leadingFormula(1).isZero() == false);
}
