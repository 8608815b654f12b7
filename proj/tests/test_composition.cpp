// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "gjms/composition.hpp"

using gjms::Composition;
using gjms::Rational;

TEST_CASE("enumeration yields 2^(N-1) compositions in lexicographic order") {
  for (int N = 1; N <= 10; ++N) {
    auto all = gjms::enumerateCompositions(N);
    CHECK(all.size() == (std::size_t{1} << (N - 1)));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
    for (const auto& I : all) CHECK(I.size() == N);
  }
  CHECK_THROWS(gjms::enumerateCompositions(0));
  CHECK_THROWS(Composition{1, 0});
}

TEST_CASE("composition helpers") {
  Composition I{2, 1, 3};
  CHECK(I.str() == "(2,1,3)");
  CHECK(I.reversed() == Composition{3, 1, 2});
  CHECK(I.first() == 2);
  CHECK(I.last() == 3);
  CHECK(I.slice(1, 3) == Composition{1, 3});
  CHECK(I.concat(Composition{4}) == Composition{2, 1, 3, 4});
}

TEST_CASE("small coefficient values") {
  CHECK(gjms::mcoeff({1}) == Rational(1));
  CHECK(gjms::mcoeff({1, 1}) == Rational(-1));
  CHECK(gjms::mcoeff({1, 2}) == Rational(-2));
  CHECK(gjms::mcoeff({1, 1, 1}) == Rational(3));
  CHECK(gjms::mcoeff({2, 2}) == Rational(-9));
  CHECK(gjms::ncoeff({1, 2}) == Rational(2));
  CHECK(gjms::ncoeff({2, 2}) == Rational(9));
  CHECK(gjms::ncoeff({1, 1, 1, 1, 1}) == Rational(1));
}

TEST_CASE("binomial and factorial forms of n_I agree") {
  for (int N = 1; N <= 9; ++N)
    for (const auto& I : gjms::enumerateCompositions(N)) CHECK(gjms::ncoeff(I) == gjms::ncoeffReduced(I));
}

TEST_CASE("quadratic relations for m_I hold for every composition of size <= 10") {
  for (int N = 1; N <= 10; ++N)
    for (const auto& I : gjms::enumerateCompositions(N)) {
      CHECK(gjms::splitFirstResidual(I).isZero());
      CHECK(gjms::splitLastResidual(I).isZero());
    }
}

TEST_CASE("m_I is symmetric under reversal") {
  for (int N = 1; N <= 8; ++N)
    for (const auto& I : gjms::enumerateCompositions(N)) CHECK(gjms::mcoeff(I) == gjms::mcoeff(I.reversed()));
}
