// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

// Reference computations used by the acceptance driver. They share nothing with the library
// beyond GMP rationals: words are plain integer vectors and every coefficient is recomputed
// from its defining product formula.

#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

namespace oracle {

using Word = std::vector<int>;
using Sum = std::map<Word, mpq_class>;

std::vector<Word> compositions(int N);
mpq_class fact(int n);
mpq_class mCoefficient(const Word& I);
// n_I in its factorial form (N-1)!^2 prod 1/(I_j-1)!^2 prod 1/(L_j (N - L_j)).
mpq_class nCoefficient(const Word& I);

Sum buildingBlock(int N);
// sum_I n_I M_{I_1} ... M_{I_r}, expanded into words in P.
Sum inversionExpansion(int N);

mpq_class lemmaSubsetSum(const std::vector<mpq_class>& K, const mpq_class& X, const mpq_class& Y, bool& degenerate);
mpq_class lemmaClosedForm(const std::vector<mpq_class>& K, const mpq_class& X, const mpq_class& Y);

// Einstein model at a numeric point.
mpq_class einsteinGjms(int N, const mpq_class& n, const mpq_class& lambda, const mpq_class& delta);
mpq_class einsteinBlock(int N, const mpq_class& n, const mpq_class& lambda, const mpq_class& delta);
mpq_class einsteinInversion(int N, const mpq_class& n, const mpq_class& lambda, const mpq_class& delta);

// Constant Schouten model for a diagonal matrix at a numeric dimension; index k is the r^{2k} coefficient.
std::vector<mpq_class> wFromEigenvalues(const std::vector<mpq_class>& diag, int K);
std::vector<mpq_class> muFromEigenvalues(const std::vector<mpq_class>& diag, const mpq_class& n, int Nmax);

}  // namespace oracle
