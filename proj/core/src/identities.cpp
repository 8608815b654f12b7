// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjms/identities.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "gjms/polytools.hpp"

namespace gjms {

NCSum buildM(int N) {
  NCSum s;
  for (const auto& I : enumerateCompositions(N)) s.add(Word::leftOnly(I), mcoeff(I));
  return s;
}

NCSum buildMbar(int N) {
  NCSum s;
  for (const auto& J : enumerateCompositions(N)) s.add(Word::rightOnly(J), mcoeff(J));
  return s;
}

namespace {

// Depth-first walk over compositions sharing prefix products.
void expandPrefix(int remaining, std::vector<int>& prefix, const NCSum& product,
                  const std::vector<NCSum>& Ms, NCSum& out) {
  if (remaining == 0) {
    out += product * ncoeff(Composition(prefix));
    return;
  }
  for (int a = 1; a <= remaining; ++a) {
    prefix.push_back(a);
    expandPrefix(remaining - a, prefix, product * Ms[a], Ms, out);
    prefix.pop_back();
  }
}

}  // namespace

NCSum expandInversion(int N) {
  if (N < 1) throw std::invalid_argument("order must be at least 1");
  std::vector<NCSum> Ms(N + 1);
  for (int a = 1; a <= N; ++a) Ms[a] = buildM(a);
  NCSum out;
  std::vector<int> prefix;
  expandPrefix(N, prefix, NCSum::single(Word::identity()), Ms, out);
  return out;
}

Rational lemma1Sum(const std::vector<Rational>& K, const Rational& X, const Rational& Y) {
  const int s = static_cast<int>(K.size());
  if (s < 1) throw std::invalid_argument("empty K");
  std::vector<Rational> prefix(s + 1);
  for (int i = 0; i < s; ++i) prefix[i + 1] = prefix[i] + K[i];
  auto blockSum = [&](int from, int to) { return prefix[to] - prefix[from]; };

  Rational total;
  const unsigned long subsets = 1UL << (s - 1);
  for (unsigned long A = 0; A < subsets; ++A) {
    // Cut positions a in A split K after entry a (1-based).
    Rational term(1);
    int start = 0;
    int cuts = 0;
    for (int a = 1; a <= s - 1; ++a) {
      if (!(A & (1UL << (a - 1)))) continue;
      ++cuts;
      term *= blockSum(start, a);
      Rational num = K[a - 1] + K[a];
      if (a == s - 1) num += Y;
      Rational den = blockSum(0, a) * blockSum(a, s);
      if (den.isZero()) throw std::domain_error("degenerate sample");
      term *= num / den;
      start = a;
    }
    term *= blockSum(start, s) + X;
    total += cuts % 2 ? -term : term;
  }
  return total;
}

Rational lemma1Closed(const std::vector<Rational>& K, const Rational& X, const Rational& Y) {
  const int s = static_cast<int>(K.size());
  if (s < 1) throw std::invalid_argument("empty K");
  if (s == 1) return K[0] + X;
  Rational head, tail;
  for (int i = 0; i + 1 < s; ++i) head += K[i];
  for (int i = 1; i < s; ++i) tail += K[i];
  if (tail.isZero()) throw std::domain_error("degenerate sample");
  return -(X * head + Y * (K[s - 1] + X)) / tail;
}

MuPoly buildPiPoly(int N) {
  if (N < 1) throw std::invalid_argument("order must be at least 1");
  const VarId x = varId("x");
  const Poly b = buildB(N);
  const Rational norm = factorial(N - 1).inverse();
  std::vector<std::vector<Rational>> quotients(N + 1);
  for (int a = 1; a <= N; ++a) quotients[a] = exactDivideByLinear(b, x, Rational(N - a)).univariateCoefficients(x);
  MuPoly out;
  for (const auto& I : enumerateCompositions(N)) {
    const auto& q = quotients[I.first()];
    Rational m = mcoeff(I) * norm;
    for (std::size_t k = 0; k < q.size(); ++k)
      out.addTerm(static_cast<int>(k), NCSum::single(Word::leftOnly(I), q[k] * m));
  }
  return out;
}

NCSum piSubleadingFormula(int N) {
  NCSum out = buildM(N) * Rational(-N, 2);
  for (int k = 1; k <= N - 1; ++k) {
    Rational c = binomial(N - 2, N - 1 - k) * binomial(N - 1, N - 1 - k);
    out -= (buildM(k) * buildM(N - k)) * c;
  }
  return out;
}

namespace {

std::string N_(int N) { return std::to_string(N); }

}  // namespace

CheckReport checkInversion(int N) {
  return runTimed(makeReport("inversion", {{"N", N_(N)}}), [N](CheckReport& r) {
    NCSum residual = expandInversion(N) - NCSum::single(Word::leftOnly(Composition{N}));
    settle(r, residual.str());
  });
}

CheckReport checkSelfAdjoint(int N) {
  return runTimed(makeReport("self-adjoint", {{"N", N_(N)}}), [N](CheckReport& r) {
    NCSum M = buildM(N);
    settle(r, (adjoint(M) - M).str());
  });
}

CheckReport checkSplitRelations(int N) {
  return runTimed(makeReport("split-relations", {{"N", N_(N)}}), [N](CheckReport& r) {
    for (const auto& I : enumerateCompositions(N)) {
      Rational f = splitFirstResidual(I), l = splitLastResidual(I);
      if (!f.isZero() || !l.isZero()) {
        settle(r, f.isZero() ? l.str() : f.str(), "composition " + I.str());
        return;
      }
    }
  });
}

CheckReport checkPiPoly(int N) {
  return runTimed(makeReport("pi-polynomial", {{"N", N_(N)}}), [N](CheckReport& r) {
    MuPoly pi = buildPiPoly(N);
    if (pi.degree() != N - 1) {
      settle(r, "degree " + std::to_string(pi.degree()), "expected degree " + std::to_string(N - 1));
      return;
    }
    NCSum constant = pi.coefficient(0) -
                     NCSum::single(Word::leftOnly(Composition{N}), Rational(N % 2 ? 1 : -1));
    if (!constant.isZero()) {
      settle(r, constant.str(), "constant term");
      return;
    }
    NCSum leading = pi.coefficient(N - 1) * factorial(N - 1) - buildM(N);
    if (!leading.isZero()) {
      settle(r, leading.str(), "leading coefficient");
      return;
    }
    if (N >= 2) {
      NCSum sub = pi.coefficient(N - 2) * factorial(N - 2) - piSubleadingFormula(N);
      settle(r, sub.str(), "sub-leading coefficient");
    }
  });
}

CheckReport checkLemma1(int sMax, int trials, std::uint64_t seed) {
  CheckReport base = makeReport("lemma1", {{"s_max", N_(sMax)}, {"trials", N_(trials)}});
  base.seed = seed;
  return runTimed(base, [=](CheckReport& r) {
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() {
      long num = static_cast<long>(rng() % 41) - 20;
      long den = static_cast<long>(rng() % 9) + 1;
      return Rational(num, den);
    };
    int done = 0, rejected = 0;
    while (done < trials) {
      int s = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(sMax));
      std::vector<Rational> K(s);
      for (auto& k : K) k = draw();
      Rational X = draw(), Y = draw();
      try {
        Rational lhs = lemma1Sum(K, X, Y);
        Rational rhs = lemma1Closed(K, X, Y);
        Rational zero = s > 1 ? lemma1Sum(K, 0, 0) : Rational(0);
        if (lhs != rhs || !zero.isZero()) {
          std::string ks;
          for (const auto& k : K) ks += (ks.empty() ? "" : ",") + k.str();
          settle(r, lhs != rhs ? (lhs - rhs).str() : zero.str(),
                 "K=(" + ks + ") X=" + X.str() + " Y=" + Y.str());
          return;
        }
        ++done;
      } catch (const std::domain_error&) {
        if (++rejected > 100 * trials) throw std::runtime_error("too many degenerate samples");
      }
    }
    r.detail = "rejected " + std::to_string(rejected) + " degenerate samples";
  });
}

}  // namespace gjms
