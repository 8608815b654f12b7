// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gjms/composition.hpp"
#include "gjms/matrix.hpp"
#include "gjms/poly.hpp"
#include "gjms/report.hpp"
#include "gjms/series.hpp"

namespace gjms {

// All model quantities are polynomials in the formal dimension "n" (and "lambda", "Delta" for
// the Einstein model). Optional numeric values only specialize results after the fact.
struct EinsteinModel {
  std::optional<Rational> n;
  std::optional<Rational> lambda;

  Poly lambdaPoly() const;
  EvalPoint point() const;
};

// Constant Schouten tensor, represented through its power sums p_k = tr(P^k).
struct SchoutenModel {
  std::vector<Poly> powerSums;  // p_1, p_2, ...
  std::optional<Matrix> matrix;
  std::optional<Rational> n;

  static SchoutenModel fromMatrix(const Matrix& P, int K);
  // P = (lambda/2) Id with the rank replaced by the formal dimension n.
  static SchoutenModel fromEinstein(int K);

  int available() const { return static_cast<int>(powerSums.size()); }
  const Poly& p(int k) const;
  EvalPoint point() const;
};

// Sum over compositions I of N of coef(I) * f[I_1] * ... * f[I_r], with shared prefix products.
// f is indexed 1..N (f[0] unused).
template <class T>
T sumOverCompositions(int N, const std::vector<T>& f, const std::function<Rational(const Composition&)>& coef,
                      const T& one) {
  T total = one * Rational(0);
  std::vector<int> parts;
  std::function<void(int, const T&)> walk = [&](int rest, const T& prefix) {
    if (rest == 0) {
      Rational c = coef(Composition(parts));
      if (!c.isZero()) total += prefix * c;
      return;
    }
    for (int k = 1; k <= rest; ++k) {
      parts.push_back(k);
      walk(rest - k, prefix * f[k]);
      parts.pop_back();
    }
  };
  walk(N, one);
  return total;
}

// Poly-valued n/2.
Poly halfDimension();
// Binomial coefficient C(x, k) for a polynomial x.
Poly binomialPoly(const Poly& x, int k);

// Einstein model.
Poly gjmsEinstein(const EinsteinModel& m, int N);
Poly mEinstein(const EinsteinModel& m, int N);
Poly inversionProductEinstein(const EinsteinModel& m, int N);
TruncatedSeries<Poly> wEinstein(const EinsteinModel& m, int K);

// Three Q-curvature computations, index 1..N in each vector.
struct QTable {
  std::vector<Poly> viaDefinition;
  std::vector<Poly> viaExplicit;
  std::vector<Poly> viaRecursive;
};
// mu[k], w[k] = w_{2k} and gjmsAtOne[k] = P_{2k}(1) for k = 0..N.
QTable qRoutes(int N, const std::vector<Poly>& mu, const std::vector<Poly>& w, const std::vector<Poly>& gjmsAtOne);
QTable qEinstein(const EinsteinModel& m, int N);

// Schouten model.
TruncatedSeries<Poly> vSeries(const SchoutenModel& m, int K);
TruncatedSeries<Poly> wSeries(const SchoutenModel& m, int K);
Poly muLCF(const SchoutenModel& m, int N);
// mu_{2N}, N = 1..Nmax, read from -(w'' - (n-1)w'/r)/w.
std::vector<Poly> muFromSeries(const SchoutenModel& m, int Nmax);
// H_0(r) = sum_N mu_{2N} (r^2/4)^{N-1} / (N-1)!^2.
TruncatedSeries<Poly> h0Series(const SchoutenModel& m, int K);
QTable qLCF(const SchoutenModel& m, int N);

// Einstein model checks.
CheckReport checkEinsteinM(const EinsteinModel& m, int N);
CheckReport checkEinsteinInversion(const EinsteinModel& m, int N);
CheckReport checkEinsteinQ(const EinsteinModel& m, int N);
CheckReport checkEinsteinFlat(int N);
CheckReport checkSphereEigenvalues(int nMin, int nMax, int ellMax, int Nmax);
CheckReport checkSphereQ();
CheckReport checkSumRound(int N);
CheckReport checkEinsteinLCFAgreement(int N);

// Schouten model checks.
CheckReport checkGFIdentity(const SchoutenModel& m, int K);
CheckReport checkMuLCF(const SchoutenModel& m, int N);
CheckReport checkBasic2(const SchoutenModel& m, int N);
CheckReport checkBasicSum(const SchoutenModel& m, int N);
CheckReport checkQLCF(const SchoutenModel& m, int N);
CheckReport checkQLiteral(const SchoutenModel& m);
CheckReport checkWVRelations(const SchoutenModel& m);
CheckReport checkBarSeries(const SchoutenModel& m, int Nmax);
CheckReport checkDoubleMetric(const SchoutenModel& m, int K);

// Random diagonal symmetric rational matrix, entries num/den with |num| <= 9, 1 <= den <= 5.
Matrix randomDiagonal(int d, std::uint64_t seed);

}  // namespace gjms
