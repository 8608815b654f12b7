// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "gjms/ncalg.hpp"

using namespace gjms;

TEST_CASE("word composition rules") {
  Word a = Word::leftOnly({1}), b = Word::leftOnly({2}), c = Word::rightOnly({3});
  CHECK(compose(a, b) == Word::leftOnly({1, 2}));
  CHECK(compose(a, c) == Word{{1}, {3}});
  CHECK(compose(Word{{1}, {3}}, Word::rightOnly({1})) == Word{{1}, {3, 1}});
  CHECK(compose(Word::identity(), c) == c);
  CHECK_THROWS(compose(c, a));
  CHECK_THROWS(compose(Word{{1}, {3}}, a));
}

TEST_CASE("word printing") {
  CHECK(Word::identity().str() == "1");
  CHECK(Word{{1, 2}, {1}}.str() == "P2 P4 Pbar2");
}

TEST_CASE("sums cancel and multiply") {
  NCSum x = NCSum::single(Word::leftOnly({1}), Rational(2)) + NCSum::single(Word::leftOnly({2}));
  NCSum y = x - x;
  CHECK(y.isZero());
  CHECK(y.str() == "0");
  NCSum sq = x * x;
  CHECK(sq.coefficient(Word::leftOnly({1, 1})) == Rational(4));
  CHECK(sq.coefficient(Word::leftOnly({1, 2})) == Rational(2));
  CHECK(sq.size() == 4);
}

TEST_CASE("adjoint and sigma are involutions") {
  NCSum s = NCSum::single(Word{{1, 2}, {3}}, Rational(5)) + NCSum::single(Word::leftOnly({2, 1, 1}), Rational(-1));
  CHECK(adjoint(adjoint(s)) == s);
  CHECK(sigma(sigma(s)) == s);
  CHECK(sigmaWord(Word{{1, 2}, {3, 4}}) == Word{{4, 3}, {2, 1}});
  CHECK(adjointWord(Word::leftOnly({1, 2})) == Word::leftOnly({2, 1}));
}

TEST_CASE("mu polynomials evaluate and substitute") {
  NCSum p2 = NCSum::single(Word::leftOnly({1}));
  MuPoly f({p2, p2 * Rational(2)});  // P2 + 2 mu P2
  CHECK(f.evaluate(Rational(3)) == p2 * Rational(7));
  MuPoly g = f.substituteAffine(Rational(-1), Rational(-1, 2));
  CHECK(g.evaluate(Rational(0)) == f.evaluate(Rational(-1, 2)));
  CHECK((f - f).isZero());
}
