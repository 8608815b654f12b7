// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "gjms/identities.hpp"

using namespace gjms;

namespace {
NCSum P(std::initializer_list<int> I, long c = 1) { return NCSum::single(Word::leftOnly(Composition(I)), Rational(c)); }
}  // namespace

TEST_CASE("building blocks of low order") {
  CHECK(buildM(1) == P({1}));
  CHECK(buildM(2) == P({2}) - P({1, 1}));
  CHECK(buildM(3) == P({3}) - P({1, 2}, 2) - P({2, 1}, 2) + P({1, 1, 1}, 3));
  CHECK(buildMbar(2).coefficient(Word::rightOnly({1, 1})) == Rational(-1));
}

TEST_CASE("inversion formula through order 8") {
  for (int N = 1; N <= 8; ++N) {
    CAPTURE(N);
    CHECK(expandInversion(N) == P({N}));
    CHECK(checkInversion(N).passed());
  }
}

TEST_CASE("lemma1 examples") {
  using V = std::vector<Rational>;
  CHECK(lemma1Sum(V{Rational(5)}, Rational(2), Rational(7)) == Rational(7));
  CHECK(lemma1Closed(V{Rational(5)}, Rational(2), Rational(7)) == Rational(7));
  CHECK(lemma1Sum(V{Rational(1), Rational(2), Rational(4)}, Rational(0), Rational(0)).isZero());

  // s = 2, K = (1,2), X = 3, Y = 5: A = {} gives 1 + 2 + 3 = 6, A = {1} gives -(1)(5)(1+2+5)/(1*2) = -20.
  V K{Rational(1), Rational(2)};
  CHECK(lemma1Sum(K, Rational(3), Rational(5)) == Rational(-14));
  CHECK(lemma1Closed(K, Rational(3), Rational(5)) == Rational(-14));
  CHECK_THROWS(lemma1Sum(V{Rational(1), Rational(-1), Rational(1)}, Rational(1), Rational(1)));
}

TEST_CASE("lemma1 random instances") {
  CHECK(checkLemma1(8, 200, 11).passed());
  CHECK(checkLemma1(8, 200, 11).detail == checkLemma1(8, 200, 11).detail);
}

TEST_CASE("pi polynomial structure") {
  MuPoly pi2 = buildPiPoly(2);
  CHECK(pi2.degree() == 1);
  CHECK(pi2.coefficient(0) == P({2}, -1));
  for (int N = 1; N <= 8; ++N) {
    CAPTURE(N);
    CHECK(checkPiPoly(N).passed());
  }
}

TEST_CASE("self-adjointness and split relations") {
  for (int N = 1; N <= 10; ++N) {
    CHECK(checkSelfAdjoint(N).passed());
    CHECK(checkSplitRelations(N).passed());
  }
}
