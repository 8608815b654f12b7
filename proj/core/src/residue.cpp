// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjms/residue.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>

#include "gjms/identities.hpp"
#include "gjms/polytools.hpp"

namespace gjms {

namespace {

void requirePositive(int N) {
  if (N < 1) throw std::invalid_argument("order must be at least 1");
}

// Root of the P-family denominator mu - (N - I_l).
Rational leftRoot(int N, int a) { return Rational(N - a); }
// Root of the Pbar-family denominator mu + N + 1/2 - J_r.
Rational rightRoot(int N, int b) { return Rational(2 * (b - N) - 1, 2); }

// Coefficients of the product of (x - r) over the roots of pi_{2N} except the listed ones.
std::vector<Rational> piWithout(int N, const std::vector<Rational>& skip) {
  std::vector<Rational> roots;
  std::vector<bool> used(skip.size(), false);
  for (const auto& r : piRoots(N)) {
    bool drop = false;
    for (std::size_t i = 0; i < skip.size(); ++i)
      if (!used[i] && skip[i] == r) {
        used[i] = drop = true;
        break;
      }
    if (!drop) roots.push_back(r);
  }
  for (bool u : used)
    if (!u) throw std::logic_error("skipped root is not a root of pi");
  return productOfLinear(roots, varId("x")).univariateCoefficients(varId("x"));
}

Rational mixedFactor(int N, int sizeI, int sizeJ) {
  return factorial(N) * factorial(N - 1) /
         (factorial(sizeI) * factorial(sizeI - 1) * factorial(sizeJ) * factorial(sizeJ - 1));
}

void addPoly(MuPoly& D, const Word& w, const std::vector<Rational>& coeffs, const Rational& scale) {
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (!coeffs[k].isZero()) D.addTerm(static_cast<int>(k), NCSum::single(w, coeffs[k] * scale));
}

std::string N_(int N) { return std::to_string(N); }

}  // namespace

Rational residueScale(int N) {
  Rational c = Rational(2).pow(2 * N - 1) / factorial(2 * N - 1);
  return N % 2 ? c : -c;
}

MuPoly residueIdentity() { return MuPoly({NCSum::single(Word::identity())}); }

MuPoly buildDirect(int N) {
  requirePositive(N);
  const Rational c = residueScale(N);
  const auto eta = piWithout(N, {Rational(0)});
  const auto tau = piWithout(N, {Rational(-1, 2)});
  auto etaAt = [&](int i) { return i >= 0 && i < static_cast<int>(eta.size()) ? eta[i] : Rational(0); };
  auto tauAt = [&](int i) { return i >= 0 && i < static_cast<int>(tau.size()) ? tau[i] : Rational(0); };

  MuPoly D;
  std::vector<NCSum> coeffs(2 * N);
  // Pure P words (a, I'): y = |I'|.
  for (const auto& I : enumerateCompositions(N)) {
    const Rational m1 = c * mcoeff(I);
    const Rational y(N - I.first());
    const Word w = Word::leftOnly(I);
    for (int k = 1; k <= 2 * N; ++k) {
      Rational s;
      for (int j = 0; j <= k - 1; ++j) s += etaAt(2 * N - 1 - j) * y.pow(k - 1 - j);
      coeffs[2 * N - k].add(w, s * m1);
    }
  }
  // Pure Pbar words (I', b): y = -|I'| - 1/2.
  for (const auto& J : enumerateCompositions(N)) {
    const Rational m1 = -c * mcoeff(J);
    const Rational y = Rational(J.last() - N) - Rational(1, 2);
    const Word w = Word::rightOnly(J);
    for (int k = 1; k <= 2 * N; ++k) {
      Rational s;
      for (int j = 0; j <= k - 1; ++j) s += tauAt(2 * N - 1 - j) * y.pow(k - 1 - j);
      for (int j = 0; j <= k - 2; ++j) s += Rational(1, 2) * tauAt(2 * N - 1 - j) * y.pow(k - 2 - j);
      coeffs[2 * N - k].add(w, s * m1);
    }
  }
  // Mixed words.
  std::map<std::pair<int, int>, std::vector<Rational>> mu;
  for (int sI = 1; sI < N; ++sI) {
    const int sJ = N - sI;
    const Rational base = c * mixedFactor(N, sI, sJ);
    for (const auto& I : enumerateCompositions(sI)) {
      const Rational mI = mcoeff(I);
      for (const auto& J : enumerateCompositions(sJ)) {
        auto key = std::make_pair(I.first(), J.last());
        auto it = mu.find(key);
        if (it == mu.end())
          it = mu.emplace(key, piWithout(N, {leftRoot(N, key.first), rightRoot(N, key.second)})).first;
        const Rational m2 = base * mI * mcoeff(J);
        const Word w{I, J};
        for (std::size_t p = 0; p < it->second.size(); ++p) coeffs[p].add(w, it->second[p] * m2);
      }
    }
  }
  return MuPoly(std::move(coeffs));
}

MuPoly buildClosed(int N) {
  requirePositive(N);
  const VarId x = varId("x");
  const Poly pi = buildPi(N);
  const Rational c = residueScale(N);
  MuPoly D;
  std::map<int, std::vector<Rational>> left, right;
  std::map<std::pair<int, int>, std::vector<Rational>> both;
  for (int a = 1; a <= N; ++a) {
    Poly qa = exactDivideByLinear(pi, x, leftRoot(N, a));
    left[a] = qa.univariateCoefficients(x);
    right[a] = exactDivideByLinear(pi, x, rightRoot(N, a)).univariateCoefficients(x);
    for (int b = 1; b <= N; ++b)
      if (a + b <= N)
        both[{a, b}] = exactDivideByLinear(qa, x, rightRoot(N, b)).univariateCoefficients(x);
  }
  for (const auto& I : enumerateCompositions(N)) {
    addPoly(D, Word::leftOnly(I), left[I.first()], c * mcoeff(I));
    addPoly(D, Word::rightOnly(I), right[I.last()], -c * mcoeff(I));
  }
  for (int sI = 1; sI < N; ++sI) {
    const int sJ = N - sI;
    const Rational base = c * mixedFactor(N, sI, sJ);
    for (const auto& I : enumerateCompositions(sI))
      for (const auto& J : enumerateCompositions(sJ))
        addPoly(D, Word{I, J}, both[{I.first(), J.last()}], base * mcoeff(I) * mcoeff(J));
  }
  return D;
}

NCSum leadingFormula(int N) { return buildM(N) - buildMbar(N); }

NCSum subleadingFormula(int N) {
  NCSum out = buildM(N) + leadingFormula(N) * Rational(N - 1);
  for (int a = 1; a <= N - 1; ++a) {
    NCSum diff = leadingFormula(N - a);
    NCSum bracket = diff * buildMbar(a) - buildM(a) * diff;
    out += bracket * (Rational(2 * a) * binomial(N - 1, a).pow(2));
  }
  return out;
}

CheckReport checkDirectEqualsClosed(int N) {
  return runTimed(makeReport("residue-direct-closed", {{"N", N_(N)}}), [N](CheckReport& r) {
    MuPoly diff = buildDirect(N) - buildClosed(N);
    settle(r, diff.str());
  });
}

CheckReport checkConstantTerm(int N) {
  return runTimed(makeReport("residue-constant-term", {{"N", N_(N)}}), [N](CheckReport& r) {
    MuPoly D = buildDirect(N);
    if (D.degree() > 2 * N - 1) {
      settle(r, "degree " + std::to_string(D.degree()), "degree exceeds 2N-1");
      return;
    }
    settle(r, (D.coefficient(0) - NCSum::single(Word::leftOnly(Composition{N}))).str());
  });
}

CheckReport checkFactorizations(int N) {
  return runTimed(makeReport("residue-factorization", {{"N", N_(N)}}), [N](CheckReport& r) {
    std::vector<MuPoly> D(N + 1);
    D[0] = residueIdentity();
    for (int k = 1; k <= N; ++k) D[k] = buildDirect(k);
    int verified = 0;
    for (int j = 1; j <= N; ++j) {
      NCSum first = D[N].evaluate(Rational(N - j)) - mulLeft(D[N - j].evaluate(Rational(N)), Composition{j});
      if (!first.isZero()) {
        settle(r, first.str(), "left family j=" + std::to_string(j));
        return;
      }
      NCSum second = D[N].evaluate(Rational(2 * (j - N) - 1, 2)) -
                     mulRight(D[N - j].evaluate(Rational(-2 * N - 1, 2)), Composition{j});
      if (!second.isZero()) {
        settle(r, second.str(), "right family j=" + std::to_string(j));
        return;
      }
      verified += 2;
    }
    r.detail = std::to_string(verified) + " identities";
  });
}

CheckReport checkSigmaSymmetry(int N) {
  return runTimed(makeReport("residue-sigma-symmetry", {{"N", N_(N)}}), [N](CheckReport& r) {
    MuPoly D = buildClosed(N);
    MuPoly diff = D.mapCoefficients(&sigma) - D.substituteAffine(Rational(-1), Rational(-1, 2));
    settle(r, diff.str());
  });
}

CheckReport checkTopCoefficients(int N) {
  return runTimed(makeReport("residue-top-coefficients", {{"N", N_(N)}}), [N](CheckReport& r) {
    MuPoly D = buildClosed(N);
    const Rational sign(N % 2 ? 1 : -1);
    NCSum A = D.coefficient(2 * N - 1) * (sign * factorial(2 * N - 1) / Rational(2).pow(2 * N - 1));
    NCSum dA = A - leadingFormula(N);
    if (!dA.isZero()) {
      settle(r, dA.str(), "leading coefficient");
      return;
    }
    if (N == 1) return;
    NCSum B = D.coefficient(2 * N - 2) * (sign * factorial(2 * N - 1) / Rational(2).pow(2 * N - 2));
    settle(r, (B - subleadingFormula(N)).str(), "sub-leading coefficient");
  });
}

namespace {

// prod_{t=from}^{to} t over half-integers t = from, from+1, ..., to.
Rational halfProduct(const Rational& from, const Rational& to) {
  Rational p(1);
  for (Rational t = from; t <= to; t += Rational(1)) p *= t;
  return p;
}

}  // namespace

CheckReport checkPiScalars(int N) {
  return runTimed(makeReport("pi-scalars", {{"N", N_(N)}}), [N](CheckReport& r) {
    const VarId x = varId("x");
    const Poly pi = buildPi(N);
    const Poly dpi = pi.derivative(x);
    const Poly X = Poly::variable(x);
    auto fail = [&r](const Rational& res, const std::string& what) {
      settle(r, res.str(), what);
      return true;
    };
    // pi(x) = pi(-x - 1/2)
    Poly sym = pi - pi.substitute(x, -X - Poly(Rational(1, 2)));
    if (!sym.isZero()) {
      settle(r, sym.str(), "symmetry");
      return;
    }
    Rational sgn(N % 2 ? 1 : -1);
    Rational d0 = dpi.evaluate(x, 0) - sgn * factorial(2 * N - 1) / Rational(2).pow(2 * N - 1);
    if (!d0.isZero() && fail(d0, "derivative at 0")) return;
    Rational eta0 = buildEta(N).evaluate(x, 0) - dpi.evaluate(x, 0);
    if (!eta0.isZero() && fail(eta0, "eta at 0")) return;
    const Rational half(1, 2);
    for (int j = 1; j <= N; ++j) {
      Rational sj(j % 2 ? 1 : -1);
      Rational upper = Rational(2 * N - j) - half;
      Rational shared = halfProduct(Rational(N - j) + half, upper);
      Rational tail = halfProduct(Rational(N) + half, upper);
      Rational lhs1 = shared * factorial(N - 1) / factorial(2 * N - 1);
      // At j = N the factorial ratio is read as its limit Gamma(e)/Gamma(2e) -> 2.
      Rational ratio = j < N ? factorial(N - j - 1) / factorial(2 * N - 2 * j - 1) : Rational(2);
      Rational rhs1 = tail * ratio / Rational(4).pow(j);
      if (lhs1 != rhs1 && fail(lhs1 - rhs1, "product identity j=" + std::to_string(j))) return;
      Rational a = dpi.evaluate(x, Rational(N - j)) - sj * factorial(N - j) * factorial(j - 1) * shared;
      if (!a.isZero() && fail(a, "derivative at N-j, j=" + std::to_string(j))) return;
      Rational c = dpi.evaluate(x, Rational(j - N) - half) + sj * factorial(N - j) * factorial(j - 1) * shared;
      if (!c.isZero() && fail(c, "derivative at j-N-1/2, j=" + std::to_string(j))) return;
      if (j < N) {
        const Poly lower = buildPi(N - j);
        Rational target = factorial(N) / factorial(j) * tail;
        Rational b = lower.evaluate(x, Rational(N)) - target;
        if (!b.isZero() && fail(b, "lower pi at N, j=" + std::to_string(j))) return;
        Rational d = lower.evaluate(x, -Rational(N) - half) - target;
        if (!d.isZero() && fail(d, "lower pi at -N-1/2, j=" + std::to_string(j))) return;
      }
    }
  });
}

CheckReport checkSumLemmas(int N, int pairs, std::uint64_t seed) {
  CheckReport base = makeReport("sum-lemmas", {{"N", N_(N)}, {"pairs", N_(pairs)}});
  base.seed = seed;
  return runTimed(base, [=](CheckReport& r) {
    const VarId x = varId("x");
    const Poly pi = buildPi(N);
    const auto eta = buildEta(N).univariateCoefficients(x);
    const auto tau = buildTau(N).univariateCoefficients(x);
    auto at = [](const std::vector<Rational>& v, int i) {
      return i >= 0 && i < static_cast<int>(v.size()) ? v[i] : Rational(0);
    };
    const Poly etaP = buildEta(N);
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() { return Rational(static_cast<long>(rng() % 201) - 100, static_cast<long>(rng() % 13) + 1); };
    for (int trial = 0; trial < pairs; ++trial) {
      Rational X = draw(), Y = draw();
      if (X == Y || Y.isZero()) {
        --trial;
        continue;
      }
      Rational lhs, lhsBar;
      for (int a = 1; a <= 2 * N - 1; ++a)
        for (int b = 0; b <= 2 * N - 2; ++b) {
          if (a + b < 1 || a + b > 2 * N - 1) continue;
          lhs += at(eta, a + b) * X.pow(a) * Y.pow(b);
          lhsBar += at(tau, a + b) * X.pow(a) * Y.pow(b);
          if (b >= 1 && a + b >= 2) lhsBar += Rational(1, 2) * at(tau, a + b) * X.pow(a) * Y.pow(b - 1);
        }
      Rational rhs = X * (etaP.evaluate(x, X) - etaP.evaluate(x, Y)) / (X - Y);
      Rational rhsBar = (Y * pi.evaluate(x, X) - X * pi.evaluate(x, Y)) / ((X - Y) * Y);
      if (lhs != rhs) {
        settle(r, (lhs - rhs).str(), "eta sum at x=" + X.str() + " y=" + Y.str());
        return;
      }
      if (lhsBar != rhsBar) {
        settle(r, (lhsBar - rhsBar).str(), "tau sum at x=" + X.str() + " y=" + Y.str());
        return;
      }
    }
    const Poly detaP = etaP.derivative(x);
    for (int M = 1; M <= N - 1; ++M) {
      Rational s;
      for (int a = 1; a <= 2 * N - 1; ++a)
        for (int b = 0; b <= 2 * N - 2; ++b)
          if (a + b >= 1 && a + b <= 2 * N - 1) s += at(eta, a + b) * Rational(M).pow(a + b - 1);
      Rational d = s - detaP.evaluate(x, Rational(M));
      if (!d.isZero()) {
        settle(r, d.str(), "diagonal M=" + std::to_string(M));
        return;
      }
    }
  });
}

}  // namespace gjms
