// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjms/polytools.hpp"

#include <stdexcept>

namespace gjms {

namespace {

void requirePositive(int N) {
  if (N < 1) throw std::invalid_argument("order must be at least 1");
}

}  // namespace

Poly productOfLinear(const std::vector<Rational>& roots, VarId x) {
  Poly p(1);
  Poly X = Poly::variable(x);
  for (const auto& r : roots) p *= X - Poly(r);
  return p;
}

std::vector<Rational> piRoots(int N) {
  std::vector<Rational> roots;
  for (int k = 0; k < N; ++k) roots.emplace_back(k);
  for (int k = 0; k < N; ++k) roots.push_back(Rational(-(2 * k + 1), 2));
  return roots;
}

Poly buildPi(int N) {
  requirePositive(N);
  return productOfLinear(piRoots(N), varId("x"));
}

Poly buildEta(int N) { return exactDivideByLinear(buildPi(N), varId("x"), Rational(0)); }

Poly buildTau(int N) { return exactDivideByLinear(buildPi(N), varId("x"), Rational(-1, 2)); }

Poly buildB(int N) {
  requirePositive(N);
  std::vector<Rational> roots;
  for (int k = 0; k < N; ++k) roots.emplace_back(k);
  return productOfLinear(roots, varId("x"));
}

}  // namespace gjms
