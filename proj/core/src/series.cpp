// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjms/series.hpp"

namespace gjms {

TruncatedSeries<Rational> detSeries(const Matrix& P, int K) {
  if (!P.isSymmetric()) throw std::invalid_argument("Schouten matrix must be symmetric");
  return detSeriesFromPowerSums(powerSums(P, K), K);
}

}  // namespace gjms
