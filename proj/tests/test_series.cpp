// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "gjms/series.hpp"

using namespace gjms;
using RS = TruncatedSeries<Rational>;

namespace {

RS randomUnitSeries(std::mt19937_64& rng, int K) {
  std::vector<Rational> c{Rational(1)};
  for (int k = 1; k <= K; ++k) c.emplace_back(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 6) + 1);
  return RS(c, K);
}

Matrix randomSymmetric(std::mt19937_64& rng, int d) {
  Matrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) m(i, j) = m(j, i) = Rational(static_cast<long>(rng() % 11) - 5, 2);
  return m;
}

// (1 + a t)^e by binomial coefficients with rational exponent e.
RS binomialSeries(const Rational& a, const Rational& e, int K) {
  std::vector<Rational> c;
  Rational b(1);
  for (int k = 0; k <= K; ++k) {
    c.push_back(b * a.pow(k));
    b = b * (e - Rational(k)) / Rational(k + 1);
  }
  return RS(c, K);
}

}  // namespace

TEST_CASE("square root of a perfect square") {
  RS s({Rational(1), Rational(2), Rational(1)}, 6);
  CHECK(s.sqrt() == RS({Rational(1), Rational(1)}, 6));
}

TEST_CASE("inverse, sqrt and pow round trips") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    RS f = randomUnitSeries(rng, 8);
    CHECK(f.inverse().inverse() == f);
    CHECK((f * f.inverse()) == RS::constant(Rational(1), 8));
    CHECK((f * f).sqrt() == f);
    CHECK(f.pow(Rational(3)) == f * f * f);
    CHECK(f.pow(Rational(-1, 2)) == f.sqrt().inverse());
  }
  CHECK_THROWS(RS({Rational(2), Rational(1)}, 3).inverse());
  CHECK_THROWS(RS({Rational(0), Rational(1)}, 3).sqrt());
}

TEST_CASE("mismatched truncations reduce to the smaller order") {
  RS a({Rational(1), Rational(1)}, 5), b({Rational(1), Rational(1)}, 3);
  CHECK((a * b).order() == 3);
  CHECK((a + b).order() == 3);
}

TEST_CASE("Leibniz rule for the radial derivative") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 10; ++t) {
    RS f = randomUnitSeries(rng, 7), g = randomUnitSeries(rng, 7);
    CHECK((f * g).radialD1() == f.radialD1() * g.truncated(6) + f.truncated(6) * g.radialD1());
  }
}

TEST_CASE("radial derivatives on monomials") {
  RS r2({Rational(0), Rational(1)}, 3);
  CHECK(r2.deriv2()[0] == Rational(2));
  RS r6({Rational(0), Rational(0), Rational(0), Rational(1)}, 4);
  CHECK(r6.radialD1()[2] == Rational(6));
  CHECK(r6.deriv2()[2] == Rational(30));
}

TEST_CASE("inverse of the squared metric factor") {
  std::mt19937_64 rng(17);
  Matrix P = randomSymmetric(rng, 4);
  Matrix I = Matrix::identity(4);
  const int K = 8;
  TruncatedSeries<Matrix> g({I, -P, P * P * Rational(1, 4)}, K);
  TruncatedSeries<Matrix> inv = g.inverse();
  Matrix pk = I;
  for (int N = 1; N <= K + 1; ++N) {
    CHECK(inv[N - 1] == pk * (Rational(N) * Rational(1, 2).pow(N - 1)));
    pk = pk * P;
  }
}

TEST_CASE("determinant series") {
  const int K = 7;
  for (int n = 1; n <= 6; ++n)
    CHECK(detSeries(Matrix::identity(n) * Rational(1, 2), K) == binomialSeries(Rational(-1, 4), Rational(n), K));
  std::vector<Rational> diag{Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2), Rational(-1, 2)};
  CHECK(detSeries(Matrix::diagonal(diag), K) ==
        binomialSeries(Rational(-1, 4), Rational(3), K) * binomialSeries(Rational(1, 4), Rational(2), K));
  CHECK(detSeries(Matrix::diagonal({Rational(3, 7)}), 4) == RS({Rational(1), Rational(-3, 14)}, 4));
  CHECK_THROWS(detSeries(Matrix::fromRows({{Rational(1), Rational(2)}, {Rational(0), Rational(1)}}), 3));
}

TEST_CASE("determinant series is multiplicative over blocks") {
  std::mt19937_64 rng(23);
  Matrix A = randomSymmetric(rng, 3), B = randomSymmetric(rng, 2);
  Matrix C(5);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) C(i, j) = A(i, j);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) C(3 + i, 3 + j) = B(i, j);
  CHECK(detSeries(C, 8) == detSeries(A, 8) * detSeries(B, 8));
}

TEST_CASE("sphere volume function under the radial operator") {
  // (d^2 - (n-1)/r d)((1 - r^2/4)^(n/2)) = (n/2)(n/2 - 1)(1 - r^2/4)^(n/2 - 2)
  for (int n = 3; n <= 9; ++n) {
    Rational m(n, 2);
    RS w = binomialSeries(Rational(-1, 4), m, 8);
    RS lhs = w.deriv2() - w.radialOp(Rational(n));
    CHECK(lhs == binomialSeries(Rational(-1, 4), m - Rational(2), 7).scaled(m * (m - Rational(1))));
  }
}

TEST_CASE("bi-series from a sum of squares") {
  RS f({Rational(1), Rational(2), Rational(3), Rational(4), Rational(5)}, 4);
  auto b = BiSeries<Rational>::ofSum(f, 2);
  CHECK(b.at(1, 1) == Rational(6));
  CHECK(b.at(2, 1) == Rational(12));
  CHECK(b * b.inverse() == BiSeries<Rational>::inR(RS::constant(Rational(1), 2), 2));
  CHECK_THROWS(BiSeries<Rational>::ofSum(f, 3));
}
