// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "gjms/ncalg.hpp"
#include "gjms/report.hpp"

namespace gjms {

// -(-1)^N 2^{2N-1} / (2N-1)!
Rational residueScale(int N);

// D_{2N} in mu from the coefficient recipes of the pure P, pure Pbar and mixed
// words (expansions of eta, tau and the two-root quotients of pi).
MuPoly buildDirect(int N);
// D_{2N} as the sum of the three closed families with exact divisions.
MuPoly buildClosed(int N);
// D_0 = i*.
MuPoly residueIdentity();

// Theorem-level formulas for the two top coefficients, before scaling.
NCSum leadingFormula(int N);
NCSum subleadingFormula(int N);

CheckReport checkDirectEqualsClosed(int N);
CheckReport checkConstantTerm(int N);
// Both families of N factorization identities.
CheckReport checkFactorizations(int N);
CheckReport checkSigmaSymmetry(int N);
// The mu^{2N-1} and mu^{2N-2} coefficients.
CheckReport checkTopCoefficients(int N);

// Scalar identities for pi_{2N}, eta_{2N}, tau_{2N}.
CheckReport checkPiScalars(int N);
CheckReport checkSumLemmas(int N, int pairs, std::uint64_t seed);

}  // namespace gjms
