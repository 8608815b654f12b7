// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "gjms/ncalg.hpp"
#include "gjms/report.hpp"

namespace gjms {

// M_{2N} = sum_{|I|=N} m_I P_{2I}.
NCSum buildM(int N);
// The same sum over the Pbar alphabet.
NCSum buildMbar(int N);

// sum_{|I|=N} n_I M_{2I_1} ... M_{2I_r}, fully expanded.
NCSum expandInversion(int N);

// Alternating subset sum of the quadratic lemma for K = (K_1..K_s).
// Throws std::domain_error("degenerate sample") on a zero denominator.
Rational lemma1Sum(const std::vector<Rational>& K, const Rational& X, const Rational& Y);
// K_1 + X for s = 1, otherwise -(X(K_1+..+K_{s-1}) + Y(K_s+X)) / (K_2+..+K_s).
Rational lemma1Closed(const std::vector<Rational>& K, const Rational& X, const Rational& Y);

// (1/(N-1)!) sum_{|I|=N} b_N(mu)/(mu-(N-I_l)) m_I P_{2I}.
MuPoly buildPiPoly(int N);
// -(N/2) M_{2N} - sum_k C(N-2,N-1-k) C(N-1,N-1-k) M_{2k} M_{2N-2k}.
NCSum piSubleadingFormula(int N);

CheckReport checkInversion(int N);
CheckReport checkSelfAdjoint(int N);
CheckReport checkSplitRelations(int N);
CheckReport checkPiPoly(int N);
// trials random instances with 1 <= s <= sMax.
CheckReport checkLemma1(int sMax, int trials, std::uint64_t seed);

}  // namespace gjms
