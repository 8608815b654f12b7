// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "gjms/poly.hpp"

namespace gjms {

// Product of (x - r) over the given roots, in the indeterminate x.
Poly productOfLinear(const std::vector<Rational>& roots, VarId x);

// Roots 0, 1, ..., N-1 and -1/2, ..., -N+1/2 of pi_{2N}.
std::vector<Rational> piRoots(int N);

// pi_{2N}(x) = x(x-1)...(x-N+1) (x+1/2)...(x+N-1/2), in the indeterminate "x".
Poly buildPi(int N);
// pi_{2N}(x) / x
Poly buildEta(int N);
// pi_{2N}(x) / (x + 1/2)
Poly buildTau(int N);
// b_N(x) = x(x-1)...(x-N+1)
Poly buildB(int N);

}  // namespace gjms
