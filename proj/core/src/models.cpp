// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjms/models.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace gjms {

namespace {

Poly nVar() { return Poly::variable("n"); }
Poly lambdaVar() { return Poly::variable("lambda"); }
Poly deltaVar() { return Poly::variable("Delta"); }
std::string S(int v) { return std::to_string(v); }

Rational sgn(int k) { return Rational(k % 2 == 0 ? 1 : -1); }
Rational four(int k) { return Rational(4).pow(k); }

// Collects the first nonzero residual of a sequence of comparisons.
struct Residuals {
  explicit Residuals(EvalPoint p) : at(std::move(p)) {}

  EvalPoint at;
  std::string first = "0";
  std::string where;

  template <class T>
  void add(const T& diff, const std::string& what) {
    if (first != "0") return;
    std::string s;
    if constexpr (std::is_same_v<T, Poly>)
      s = diff.partialEvaluate(at).str();
    else
      s = diff.str();
    if (s != "0") {
      first = s;
      where = what;
    }
  }
  void settleInto(CheckReport& r, const std::string& passDetail = {}) const {
    settle(r, first, first == "0" ? passDetail : where);
  }
};

EvalPoint pointOf(const std::optional<Rational>& n, const std::optional<Rational>& lambda) {
  EvalPoint at;
  if (n) at["n"] = *n;
  if (lambda) at["lambda"] = *lambda;
  return at;
}

Poly atZeroDelta(const Poly& p) { return p.partialEvaluate({{"Delta", Rational(0)}}); }

}  // namespace

Poly EinsteinModel::lambdaPoly() const { return lambdaVar(); }
EvalPoint EinsteinModel::point() const { return pointOf(n, lambda); }

SchoutenModel SchoutenModel::fromMatrix(const Matrix& P, int K) {
  if (!P.isSymmetric()) throw std::invalid_argument("Schouten matrix must be symmetric");
  SchoutenModel m;
  for (const Rational& p : gjms::powerSums(P, K)) m.powerSums.emplace_back(p);
  m.matrix = P;
  return m;
}

SchoutenModel SchoutenModel::fromEinstein(int K) {
  SchoutenModel m;
  Poly half = lambdaVar() * Rational(1, 2);
  Poly pk = nVar();
  for (int k = 1; k <= K; ++k) {
    pk = pk * half;
    m.powerSums.push_back(pk);
  }
  return m;
}

const Poly& SchoutenModel::p(int k) const {
  if (k < 1 || k > available()) throw std::out_of_range("power sum p_" + S(k) + " not available");
  return powerSums[static_cast<std::size_t>(k - 1)];
}

EvalPoint SchoutenModel::point() const { return pointOf(n, std::nullopt); }

Poly halfDimension() { return nVar() * Rational(1, 2); }

Poly binomialPoly(const Poly& x, int k) {
  Poly out(1);
  for (int i = 0; i < k; ++i) out *= x - Poly(i);
  return out / factorial(k);
}

// ---------------------------------------------------------------- Einstein

Poly gjmsEinstein(const EinsteinModel&, int N) {
  if (N < 1) throw std::invalid_argument("order must be positive");
  const Poly m = halfDimension();
  Poly out(1);
  for (int k = 0; k < N; ++k) out *= deltaVar() - lambdaVar() * (m + Poly(k)) * (m - Poly(1 + k));
  return out;
}

Poly mEinstein(const EinsteinModel& model, int N) {
  std::vector<Poly> f(static_cast<std::size_t>(N) + 1);
  for (int k = 1; k <= N; ++k) f[k] = gjmsEinstein(model, k);
  return sumOverCompositions<Poly>(N, f, mcoeff, Poly(1));
}

Poly inversionProductEinstein(const EinsteinModel& model, int N) {
  std::vector<Poly> f(static_cast<std::size_t>(N) + 1);
  for (int k = 1; k <= N; ++k) f[k] = mEinstein(model, k);
  return sumOverCompositions<Poly>(N, f, ncoeff, Poly(1));
}

TruncatedSeries<Poly> wEinstein(const EinsteinModel&, int K) {
  TruncatedSeries<Poly> base({Poly(1), lambdaVar() * Rational(-1, 4)}, K);
  return base.pow(halfDimension());
}

QTable qRoutes(int N, const std::vector<Poly>& mu, const std::vector<Poly>& w, const std::vector<Poly>& gjmsAtOne) {
  const VarId n = varId("n");
  const Poly m = halfDimension();
  QTable q;
  q.viaDefinition.assign(static_cast<std::size_t>(N) + 1, Poly());
  q.viaExplicit = q.viaDefinition;
  q.viaRecursive = q.viaDefinition;
  std::vector<Poly> pOne(static_cast<std::size_t>(N) + 1);
  for (int k = 1; k <= N; ++k) {
    q.viaDefinition[k] = exactDivideByLinear(gjmsAtOne[k], n, Rational(2 * k)) * (sgn(k) * Rational(2));

    Poly ex;
    for (int a = 1; a <= k; ++a) {
      auto coef = [a](const Composition& I) { return ncoeff(I.concat(Composition{a})); };
      ex += sumOverCompositions<Poly>(k - a, mu, coef, Poly(1)) * w[a] *
            (factorial(a) * factorial(a - 1) * four(a));
    }
    q.viaExplicit[k] = ex * sgn(k);

    Poly rest = w[k] * (factorial(k) * factorial(k - 1) * four(k));
    for (int a = 1; a < k; ++a) {
      auto coef = [a](const Composition& I) { return mcoeff(I.concat(Composition{a})); };
      rest -= sumOverCompositions<Poly>(k - a, pOne, coef, Poly(1)) * q.viaRecursive[a] * sgn(a);
    }
    q.viaRecursive[k] = rest * sgn(k);
    pOne[k] = (m - Poly(k)) * q.viaRecursive[k] * sgn(k);
  }
  return q;
}

QTable qEinstein(const EinsteinModel& model, int N) {
  std::vector<Poly> mu(static_cast<std::size_t>(N) + 1), w(static_cast<std::size_t>(N) + 1),
      one(static_cast<std::size_t>(N) + 1);
  TruncatedSeries<Poly> ws = wEinstein(model, N);
  for (int k = 0; k <= N; ++k) w[k] = ws[k];
  for (int k = 1; k <= N; ++k) {
    mu[k] = atZeroDelta(mEinstein(model, k));
    one[k] = atZeroDelta(gjmsEinstein(model, k));
  }
  return qRoutes(N, mu, w, one);
}

// ---------------------------------------------------------------- Schouten

TruncatedSeries<Poly> vSeries(const SchoutenModel& m, int K) {
  if (m.available() < K) throw std::invalid_argument("model has too few power sums for order " + S(K));
  return detSeriesFromPowerSums<Poly>(std::vector<Poly>(m.powerSums.begin(), m.powerSums.begin() + K), K);
}

TruncatedSeries<Poly> wSeries(const SchoutenModel& m, int K) { return vSeries(m, K).sqrt(); }

Poly muLCF(const SchoutenModel& model, int N) {
  Poly inner = (halfDimension() - Poly(N)) * model.p(N);
  for (int a = 1; a < N; ++a) inner += model.p(a) * model.p(N - a) * Rational(1, 2);
  return inner * -(factorial(N - 1) * factorial(N - 1) * Rational(2).pow(N - 1));
}

std::vector<Poly> muFromSeries(const SchoutenModel& model, int Nmax) {
  TruncatedSeries<Poly> w = wSeries(model, Nmax);
  TruncatedSeries<Poly> lw = w.deriv2() - w.radialOp(nVar());
  TruncatedSeries<Poly> h = -(lw * w.truncated(Nmax - 1).inverse());
  std::vector<Poly> mu(static_cast<std::size_t>(Nmax) + 1);
  for (int N = 1; N <= Nmax; ++N) mu[N] = h[N - 1] * (factorial(N - 1) * factorial(N - 1) * four(N - 1));
  return mu;
}

TruncatedSeries<Poly> h0Series(const SchoutenModel& model, int K) {
  std::vector<Poly> c;
  for (int N = 1; N <= K + 1; ++N)
    c.push_back(muLCF(model, N) / (factorial(N - 1) * factorial(N - 1) * four(N - 1)));
  return TruncatedSeries<Poly>(std::move(c), K);
}

QTable qLCF(const SchoutenModel& model, int N) {
  std::vector<Poly> mu(static_cast<std::size_t>(N) + 1), w(static_cast<std::size_t>(N) + 1),
      one(static_cast<std::size_t>(N) + 1);
  TruncatedSeries<Poly> ws = wSeries(model, N);
  for (int k = 0; k <= N; ++k) w[k] = ws[k];
  for (int k = 1; k <= N; ++k) mu[k] = muLCF(model, k);
  for (int k = 1; k <= N; ++k) one[k] = sumOverCompositions<Poly>(k, mu, ncoeff, Poly(1));
  return qRoutes(N, mu, w, one);
}

Matrix randomDiagonal(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Rational> diag;
  for (int i = 0; i < d; ++i) {
    long num = static_cast<long>(rng() % 19) - 9;
    long den = static_cast<long>(rng() % 5) + 1;
    diag.emplace_back(num, den);
  }
  return Matrix::diagonal(diag);
}

// ---------------------------------------------------------------- checks

CheckReport checkEinsteinM(const EinsteinModel& model, int N) {
  return runTimed(makeReport("einstein-m", {{"N", S(N)}}), [&](CheckReport& r) {
    Residuals res{model.point()};
    Poly expected = gjmsEinstein(model, 1) * (factorial(N) * factorial(N - 1)) * lambdaVar().pow(N - 1);
    res.add(mEinstein(model, N) - expected, "M_2N differs from N!(N-1)! lambda^(N-1) P_2");
    res.settleInto(r);
  });
}

CheckReport checkEinsteinInversion(const EinsteinModel& model, int N) {
  return runTimed(makeReport("einstein-inversion", {{"N", S(N)}}), [&](CheckReport& r) {
    Residuals res{model.point()};
    Poly inv = inversionProductEinstein(model, N);
    res.add(inv - gjmsEinstein(model, N), "inversion sum differs from the product formula");
    Poly p2 = gjmsEinstein(model, 1), shifted(1);
    for (int k = 0; k < N; ++k) shifted *= p2 + lambdaVar() * Rational(k * (k + 1));
    res.add(inv - shifted, "inversion sum differs from prod (P_2 + lambda k(k+1))");
    res.settleInto(r);
  });
}

CheckReport checkEinsteinQ(const EinsteinModel& model, int N) {
  return runTimed(makeReport("einstein-q", {{"N", S(N)}}), [&](CheckReport& r) {
    Residuals res{model.point()};
    QTable q = qEinstein(model, N);
    for (int k = 1; k <= N; ++k) {
      res.add(q.viaExplicit[k] - q.viaDefinition[k], "explicit vs definition at order " + S(2 * k));
      res.add(q.viaRecursive[k] - q.viaDefinition[k], "recursive vs definition at order " + S(2 * k));
    }
    res.add(q.viaDefinition[1] - lambdaVar() * halfDimension(), "Q_2 differs from J");
    res.settleInto(r);
  });
}

CheckReport checkEinsteinFlat(int N) {
  return runTimed(makeReport("einstein-flat", {{"N", S(N)}}), [&](CheckReport& r) {
    EinsteinModel flat{std::nullopt, Rational(0)};
    Residuals res{flat.point()};
    res.add(gjmsEinstein(flat, N) - deltaVar().pow(N), "P_2N differs from Delta^N");
    res.add(mEinstein(flat, N) - (N == 1 ? deltaVar() : Poly()), "M_2N");
    res.settleInto(r);
  });
}

CheckReport checkSphereEigenvalues(int nMin, int nMax, int ellMax, int Nmax) {
  auto base = makeReport("sphere-eigenvalues",
                         {{"n_min", S(nMin)}, {"n_max", S(nMax)}, {"ell_max", S(ellMax)}, {"N_max", S(Nmax)}});
  return runTimed(base, [=](CheckReport& r) {
    EinsteinModel sphere{std::nullopt, Rational(1)};
    int count = 0;
    for (int N = 1; N <= Nmax; ++N) {
      Poly p = gjmsEinstein(sphere, N);
      for (int n = nMin; n <= nMax; ++n)
        for (int ell = 0; ell <= ellMax; ++ell) {
          Rational value =
              p.evaluate({{"n", Rational(n)}, {"lambda", Rational(1)}, {"Delta", Rational(-ell * (ell + n - 1))}});
          Rational h = Rational(ell) + Rational(n, 2), spectral = sgn(N);
          for (int j = 1; j <= N; ++j) spectral *= (h - Rational(j)) * (h + Rational(j - 1));
          ++count;
          if (value != spectral) {
            settle(r, (value - spectral).str(),
                   "N=" + S(N) + " n=" + S(n) + " ell=" + S(ell) + " product " + value.str() + " spectral " +
                       spectral.str());
            return;
          }
        }
    }
    settle(r, "0", S(count) + " eigenvalues");
  });
}

CheckReport checkSphereQ() {
  return runTimed(makeReport("sphere-q"), [](CheckReport& r) {
    EinsteinModel sphere{Rational(4), Rational(1)};
    Residuals res{sphere.point()};
    QTable e = qEinstein(sphere, 2);
    SchoutenModel lcf = SchoutenModel::fromMatrix(Matrix::identity(4) * Rational(1, 2), 2);
    lcf.n = Rational(4);
    QTable l = qLCF(lcf, 2);
    const std::vector<std::pair<int, long>> expected{{1, 2}, {2, 6}};
    for (auto [k, v] : expected) {
      for (const QTable* t : {&e, &l}) {
        const char* model = t == &e ? "einstein" : "lcf";
        res.add(t->viaDefinition[k] - Poly(v), std::string(model) + " definition route, order " + S(2 * k));
        res.add(t->viaExplicit[k] - Poly(v), std::string(model) + " explicit route, order " + S(2 * k));
        res.add(t->viaRecursive[k] - Poly(v), std::string(model) + " recursive route, order " + S(2 * k));
      }
    }
    res.settleInto(r);
  });
}

CheckReport checkSumRound(int N) {
  return runTimed(makeReport("sum-round", {{"N", S(N)}}), [N](CheckReport& r) {
    const Poly m = halfDimension();
    Poly lhs;
    for (int k = 0; k < N; ++k) {
      Rational a = Rational(2).pow(k) * binomial(N - 1, k) * factorial(k);
      lhs += m * (m - Poly(1)) * binomialPoly(m, k) *
             (a * a * factorial(N - k) * factorial(N - k - 1) * sgn(k) / four(k));
    }
    Poly rhs = (m - Poly(N)) * binomialPoly(m, N) * (sgn(N) * factorial(N - 1) * factorial(N));
    Residuals res{EvalPoint{}};
    res.add(-lhs - rhs, "summation identity");
    res.settleInto(r);
  });
}

CheckReport checkEinsteinLCFAgreement(int N) {
  return runTimed(makeReport("einstein-lcf-agreement", {{"N", S(N)}}), [N](CheckReport& r) {
    EinsteinModel e;
    SchoutenModel s = SchoutenModel::fromEinstein(N);
    Residuals res{EvalPoint{}};
    TruncatedSeries<Poly> we = wEinstein(e, N), wl = wSeries(s, N);
    for (int k = 0; k <= N; ++k) res.add(we[k] - wl[k], "w coefficient " + S(2 * k));
    for (int k = 1; k <= N; ++k) res.add(atZeroDelta(mEinstein(e, k)) - muLCF(s, k), "mu at order " + S(2 * k));
    QTable qe = qEinstein(e, N), ql = qLCF(s, N);
    for (int k = 1; k <= N; ++k) {
      res.add(qe.viaDefinition[k] - ql.viaDefinition[k], "Q definition route, order " + S(2 * k));
      res.add(qe.viaExplicit[k] - ql.viaExplicit[k], "Q explicit route, order " + S(2 * k));
      res.add(qe.viaRecursive[k] - ql.viaRecursive[k], "Q recursive route, order " + S(2 * k));
    }
    res.settleInto(r);
  });
}

CheckReport checkGFIdentity(const SchoutenModel& model, int K) {
  return runTimed(makeReport("gf-identity", {{"K", S(K)}}), [&](CheckReport& r) {
    TruncatedSeries<Poly> w = wSeries(model, K + 1);
    TruncatedSeries<Poly> lhs = (w.deriv2() - w.radialOp(nVar())) + h0Series(model, K) * w.truncated(K);
    Residuals res{model.point()};
    for (int k = 0; k <= K; ++k) res.add(lhs[k], "coefficient of r^" + S(2 * k));
    res.settleInto(r, "zero through r^" + S(2 * K));
  });
}

CheckReport checkMuLCF(const SchoutenModel& model, int N) {
  return runTimed(makeReport("lcf-mu", {{"N", S(N)}}), [&](CheckReport& r) {
    Residuals res{model.point()};
    res.add(muLCF(model, N) - muFromSeries(model, N)[N], "closed form vs series");
    res.settleInto(r);
  });
}

CheckReport checkBasic2(const SchoutenModel& model, int N) {
  return runTimed(makeReport("lcf-basic2", {{"N", S(N)}}), [&](CheckReport& r) {
    TruncatedSeries<Poly> w = wSeries(model, N);
    Poly lhs;
    for (int k = 0; k < N; ++k) {
      Rational c = Rational(2).pow(k) * factorial(N - 1) / factorial(N - 1 - k);
      lhs += muLCF(model, N - k) * w[k] * (c * c);
    }
    Poly rhs = (halfDimension() - Poly(N)) * w[N] * (factorial(N - 1) * factorial(N) * four(N));
    Residuals res{model.point()};
    res.add(lhs - rhs, "weighted mu sum");
    res.settleInto(r);
  });
}

CheckReport checkBasicSum(const SchoutenModel& model, int N) {
  return runTimed(makeReport("lcf-basic-sum", {{"N", S(N)}}), [&](CheckReport& r) {
    const Poly m = halfDimension();
    std::vector<Poly> mu(static_cast<std::size_t>(N) + 1);
    for (int k = 1; k <= N; ++k) mu[k] = muLCF(model, k);
    Poly lhs;
    for (const Composition& I : enumerateCompositions(N)) {
      std::vector<bool> used(static_cast<std::size_t>(N), false);
      Poly term(ncoeff(I));
      int tail = 0;
      for (int t = I.length() - 1; t >= 1; --t) {
        tail += I[static_cast<std::size_t>(t)];
        used[tail] = true;
        term *= Poly(N - tail);
      }
      for (int k = 1; k < N; ++k)
        if (!used[k]) term *= m - Poly(k);
      for (int x : I.entries()) term *= mu[x];
      lhs += term;
    }
    Poly rhs = (m - Poly(N)) * wSeries(model, N)[N] * (factorial(N - 1) * factorial(N) * four(N));
    for (int k = 1; k < N; ++k) rhs *= m - Poly(k);
    Residuals res{model.point()};
    res.add(lhs - rhs, "cleared sum over compositions");
    res.settleInto(r);
  });
}

CheckReport checkQLCF(const SchoutenModel& model, int N) {
  return runTimed(makeReport("lcf-q", {{"N", S(N)}}), [&](CheckReport& r) {
    QTable q = qLCF(model, N);
    Residuals res{model.point()};
    for (int k = 1; k <= N; ++k) {
      res.add(q.viaExplicit[k] - q.viaDefinition[k], "explicit vs definition at order " + S(2 * k));
      res.add(q.viaRecursive[k] - q.viaDefinition[k], "recursive vs definition at order " + S(2 * k));
    }
    res.settleInto(r);
  });
}

CheckReport checkQLiteral(const SchoutenModel& model) {
  return runTimed(makeReport("lcf-q-literal"), [&](CheckReport& r) {
    QTable qt = qLCF(model, 4);
    const auto& Q = qt.viaDefinition;
    TruncatedSeries<Poly> w = wSeries(model, 4);
    std::vector<Poly> mu{Poly(), muLCF(model, 1), muLCF(model, 2), muLCF(model, 3)};
    const Poly m = halfDimension();
    std::vector<Poly> P{Poly()};
    for (int k = 1; k <= 3; ++k) P.push_back((m - Poly(k)) * Q[k] * sgn(k));
    Residuals res{model.point()};
    res.add(Q[2] - (m * model.p(1) * model.p(1) - model.p(2) * Rational(2)), "Q_4 closed form");
    res.add(Q[2] - (w[2] * Rational(32) + mu[1] * w[1] * Rational(4)), "Q_4 = 32 w_4 + 4 M_2(w_2)");
    res.add(Q[3] + P[1] * Q[2] * Rational(2) - P[2] * Q[1] * Rational(2) + P[1] * P[1] * Q[1] * Rational(3) +
                w[3] * Rational(3 * 2 * 2 * 64),
            "Q_6 recursive formula");
    res.add(Q[3] - (w[3] * Rational(-3 * 2 * 2 * 64) - mu[1] * w[2] * Rational(64) - mu[2] * w[1] * Rational(8) -
                    mu[1] * mu[1] * w[1] * Rational(4)),
            "Q_6 explicit formula");
    res.add(Q[4] - (w[4] * Rational(6 * 24 * 256) + mu[3] * w[1] * Rational(12) + mu[2] * w[2] * Rational(16 * 18) +
                    mu[1] * w[3] * Rational(64 * 36) + mu[2] * mu[1] * w[1] * Rational(12) +
                    mu[1] * mu[2] * w[1] * Rational(16) + mu[1] * mu[1] * w[2] * Rational(16 * 6) +
                    mu[1] * mu[1] * mu[1] * w[1] * Rational(4)),
            "Q_8 explicit formula");
    res.add(Q[4] + P[1] * Q[3] * Rational(3) + P[3] * Q[1] * Rational(3) - P[2] * Q[2] * Rational(9) -
                P[1] * P[2] * Q[1] * Rational(8) + P[1] * P[1] * Q[2] * Rational(12) -
                P[2] * P[1] * Q[1] * Rational(12) + P[1] * P[1] * P[1] * Q[1] * Rational(18) -
                w[4] * Rational(6 * 24 * 256),
            "Q_8 recursive formula");
    res.settleInto(r);
  });
}

CheckReport checkWVRelations(const SchoutenModel& model) {
  return runTimed(makeReport("wv-relations"), [&](CheckReport& r) {
    TruncatedSeries<Poly> v = vSeries(model, 4), w = v.sqrt();
    const Poly &v2 = v[1], &v4 = v[2], &v6 = v[3], &v8 = v[4];
    Residuals res{model.point()};
    res.add(v2 + model.p(1) * Rational(1, 2), "v_2 = -J/2");
    res.add(v4 - (model.p(1) * model.p(1) - model.p(2)) * Rational(1, 8), "v_4 trace form");
    res.add(w[1] * Rational(2) - v2, "2 w_2 = v_2");
    res.add(w[2] * Rational(8) - (v4 * Rational(4) - v2 * v2), "8 w_4");
    res.add(w[3] * Rational(16) - (v6 * Rational(8) - v4 * v2 * Rational(4) + v2 * v2 * v2), "16 w_6");
    res.add(w[4] * Rational(128) - (v8 * Rational(64) - v6 * v2 * Rational(32) - v4 * v4 * Rational(16) +
                                     v2 * v2 * v4 * Rational(24) - v2 * v2 * v2 * v2 * Rational(5)),
            "128 w_8");
    res.settleInto(r);
  });
}

namespace {

// w(r, s) = w(r^2 + s^2) / w(r^2) for a univariate series with unit constant term.
BiSeries<Poly> quotientBiSeries(const TruncatedSeries<Poly>& f, int K) {
  return BiSeries<Poly>::ofSum(f, K) * BiSeries<Poly>::inR(f.truncated(K).inverse(), K);
}

void checkLemmaL3(Residuals& res, const TruncatedSeries<Poly>& f, int K, const std::string& label) {
  BiSeries<Poly> b = quotientBiSeries(f, K);
  for (int k = 0; k + 2 <= K; ++k) {
    res.add(b.at(1, k) - (f[k + 1] * Rational(k + 1) - f[1] * f[k]), label + " first derivative, s-degree " + S(k));
    res.add(b.at(2, k) * Rational(2) - (f[k + 2] * Rational((k + 2) * (k + 1)) -
                                        f[1] * f[k + 1] * Rational(2 * (k + 1)) - (f[2] - f[1] * f[1]) * f[k] * Rational(2)),
            label + " second derivative, s-degree " + S(k));
  }
}

}  // namespace

CheckReport checkBarSeries(const SchoutenModel& model, int Nmax) {
  return runTimed(makeReport("bar-series", {{"N_max", S(Nmax)}}), [&](CheckReport& r) {
    const int K = Nmax + 1;
    const Poly n = nVar();
    TruncatedSeries<Poly> v = vSeries(model, 2 * K), w = v.sqrt();
    BiSeries<Poly> W = quotientBiSeries(w, K);
    Residuals res{model.point()};

    for (int k = 0; k < Nmax; ++k)
      res.add(W.at(1, k) * Rational(2) - (w[k + 1] * Rational(2 * k + 2) - w[1] * w[k] * Rational(2)),
              "(a) s-degree " + S(k));
    for (int N = 2; N <= Nmax; ++N)
      res.add(W.at(2, N - 2) * Rational(24) -
                  (w[N] * Rational(12 * N * (N - 1)) + (w[1] * w[1] - w[2]) * w[N - 2] * Rational(24) -
                   w[1] * w[N - 1] * Rational(12 * (2 * N - 2))),
              "(b) N=" + S(N));

    checkLemmaL3(res, w, K, "(c) w");
    std::mt19937_64 rng(0x5eed);
    std::vector<Poly> rc{Poly(1)};
    for (int k = 1; k <= 2 * K; ++k)
      rc.emplace_back(Rational(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 7) + 1));
    checkLemmaL3(res, TruncatedSeries<Poly>(rc, 2 * K), K, "(c) random series");

    const Poly J = w[1] * Rational(-4);
    for (int N = 1; N <= Nmax; ++N) {
      Poly barP2 = W.at(1, N - 1) * Rational(2) - ((n + Poly(1)) * Rational(1, 2) - Poly(1)) * J * W.at(0, N - 1);
      Poly p2 = -(halfDimension() - Poly(1)) * J * w[N - 1];
      res.add(barP2 - p2 - w[N] * Rational(2 * N), "(d) N=" + S(N));
    }

    TruncatedSeries<Poly> vr = v.truncated(K);
    TruncatedSeries<Poly> ratio = vr.radialD1() * vr.truncated(K - 1).inverse();
    BiSeries<Poly> drift = (BiSeries<Poly>::inR(ratio, K) * W.d1r()).shiftR();
    BiSeries<Poly> lw = W.d2s() - W.d1s().scaled(n) + W.d2r() + drift;
    BiSeries<Poly> muBar = (lw * W.inverse()).scaled(Rational(-1));
    for (int N = 3; N <= Nmax; ++N) {
      Rational norm = factorial(N - 2) * factorial(N - 2) * four(N - 2);
      res.add(muLCF(model, N) - muBar.at(1, N - 2) * (norm * Rational(2 * (2 * N - 2))), "(e) N=" + S(N));
    }
    res.settleInto(r);
  });
}

CheckReport checkDoubleMetric(const SchoutenModel& model, int K) {
  return runTimed(makeReport("double-metric", {{"K", S(K)}}), [&](CheckReport& r) {
    if (!model.matrix) throw std::invalid_argument("double metric check needs an explicit Schouten matrix");
    const Matrix& P = *model.matrix;
    const int d = P.dim();
    const Matrix I = Matrix::identity(d);
    TruncatedSeries<Matrix> g({I, -P, P * P * Rational(1, 4)}, 2 * K);
    TruncatedSeries<Matrix> gInv = g.truncated(K).inverse();

    std::vector<Matrix> bar;
    Matrix pk = P;
    for (int k = 0; k <= K; ++k) {
      bar.push_back(pk * Rational(1, 2).pow(k));
      pk = pk * P;
    }
    BiSeries<Matrix> E(I, K);
    E.at(0, 0) = I;
    for (int i = 0; i <= K; ++i) E.at(i, 1) = bar[i] * Rational(-1, 2);
    BiSeries<Matrix> rhs = E * E;
    BiSeries<Matrix> lhs = BiSeries<Matrix>::inR(gInv, K) * BiSeries<Matrix>::ofSum(g, K);

    std::string first = "0", where;
    auto note = [&](const Matrix& diff, const std::string& what) {
      if (first == "0" && !diff.isZero()) {
        first = diff.str();
        where = what;
      }
    };
    for (int i = 0; i <= K; ++i)
      for (int j = 0; j <= K; ++j) note(lhs.at(i, j) - rhs.at(i, j), "(i) bidegree " + S(i) + "," + S(j));

    BiSeries<Matrix> gg = BiSeries<Matrix>::inR(g.truncated(K), K) * rhs;
    for (int k = 0; k <= K; ++k)
      for (int l = 0; k + l <= K; ++l)
        note(gg.at(k, l) - g[k + l] * binomial(k + l, k), "(ii) bidegree " + S(k) + "," + S(l));

    TruncatedSeries<Matrix> schoutenBar = (g.truncated(K).radialD1() * gInv.truncated(K - 1)).scaled(Rational(-1, 2));
    for (int k = 0; k < K; ++k) note(schoutenBar[k] - bar[k], "(iii) r-degree " + S(k));
    settle(r, first, where);
  });
}

}  // namespace gjms
