// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <stdexcept>

namespace oracle {

std::vector<Word> compositions(int N) {
  std::vector<Word> out;
  // Bit i of mask set means a cut after position i + 1.
  for (unsigned mask = 0; mask < (1u << (N - 1)); ++mask) {
    Word w;
    int run = 1;
    for (int i = 0; i < N - 1; ++i) {
      if (mask & (1u << i)) {
        w.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    w.push_back(run);
    out.push_back(w);
  }
  return out;
}

mpq_class fact(int n) {
  mpz_class f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return mpq_class(f);
}

mpq_class mCoefficient(const Word& I) {
  int N = 0;
  for (int x : I) N += x;
  const int r = static_cast<int>(I.size());
  mpq_class c = fact(N) * fact(N - 1) * (r % 2 == 0 ? -1 : 1);
  for (int x : I) c /= fact(x) * fact(x - 1);
  for (int j = 0; j + 1 < r; ++j) c /= I[j] + I[j + 1];
  return c;
}

mpq_class nCoefficient(const Word& I) {
  int N = 0;
  for (int x : I) N += x;
  mpq_class c = fact(N - 1) * fact(N - 1);
  for (int x : I) c /= fact(x - 1) * fact(x - 1);
  int L = 0;
  for (std::size_t j = 0; j + 1 < I.size(); ++j) {
    L += I[j];
    c /= mpq_class(L * (N - L));
  }
  return c;
}

Sum buildingBlock(int N) {
  Sum s;
  for (const Word& I : compositions(N)) s[I] += mCoefficient(I);
  return s;
}

namespace {
Sum multiply(const Sum& a, const Sum& b) {
  Sum out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out[w] += ca * cb;
    }
  return out;
}
}  // namespace

Sum inversionExpansion(int N) {
  std::vector<Sum> M(static_cast<std::size_t>(N) + 1);
  for (int k = 1; k <= N; ++k) M[k] = buildingBlock(k);
  Sum total;
  for (const Word& I : compositions(N)) {
    Sum term{{Word{}, nCoefficient(I)}};
    for (int x : I) term = multiply(term, M[x]);
    for (const auto& [w, c] : term) total[w] += c;
  }
  for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

mpq_class lemmaSubsetSum(const std::vector<mpq_class>& K, const mpq_class& X, const mpq_class& Y, bool& degenerate) {
  const int s = static_cast<int>(K.size());
  degenerate = false;
  mpq_class total = 0;
  for (unsigned A = 0; A < (1u << (s - 1)); ++A) {
    // Blocks end at each a in A (1-based positions) and at s.
    std::vector<int> ends;
    for (int a = 1; a < s; ++a)
      if (A & (1u << (a - 1))) ends.push_back(a);
    mpq_class term = (ends.size() % 2 == 0) ? 1 : -1;
    int start = 0;
    std::vector<int> all = ends;
    all.push_back(s);
    for (int e : all) {
      mpq_class block = 0;
      for (int i = start; i < e; ++i) block += K[i];
      if (e == s) block += X;
      term *= block;
      start = e;
    }
    for (int a : ends) {
      mpq_class left = 0, right = 0;
      for (int i = 0; i < a; ++i) left += K[i];
      for (int i = a; i < s; ++i) right += K[i];
      if (left == 0 || right == 0) {
        degenerate = true;
        return 0;
      }
      term *= K[a - 1] + K[a] + (a == s - 1 ? Y : mpq_class(0));
      term /= left * right;
    }
    total += term;
  }
  return total;
}

mpq_class lemmaClosedForm(const std::vector<mpq_class>& K, const mpq_class& X, const mpq_class& Y) {
  const int s = static_cast<int>(K.size());
  if (s == 1) return K[0] + X;
  mpq_class head = 0, tail = 0;
  for (int i = 0; i < s - 1; ++i) head += K[i];
  for (int i = 1; i < s; ++i) tail += K[i];
  return -(X * head + Y * (K[s - 1] + X)) / tail;
}

mpq_class einsteinGjms(int N, const mpq_class& n, const mpq_class& lambda, const mpq_class& delta) {
  mpq_class m = n / 2, p = 1;
  for (int k = 0; k < N; ++k) p *= delta - lambda * (m + k) * (m - 1 - k);
  return p;
}

mpq_class einsteinBlock(int N, const mpq_class& n, const mpq_class& lambda, const mpq_class& delta) {
  mpq_class total = 0;
  for (const Word& I : compositions(N)) {
    mpq_class t = mCoefficient(I);
    for (int x : I) t *= einsteinGjms(x, n, lambda, delta);
    total += t;
  }
  return total;
}

mpq_class einsteinInversion(int N, const mpq_class& n, const mpq_class& lambda, const mpq_class& delta) {
  std::vector<mpq_class> M(static_cast<std::size_t>(N) + 1);
  for (int k = 1; k <= N; ++k) M[k] = einsteinBlock(k, n, lambda, delta);
  mpq_class total = 0;
  for (const Word& I : compositions(N)) {
    mpq_class t = nCoefficient(I);
    for (int x : I) t *= M[x];
    total += t;
  }
  return total;
}

std::vector<mpq_class> wFromEigenvalues(const std::vector<mpq_class>& diag, int K) {
  std::vector<mpq_class> w(static_cast<std::size_t>(K) + 1, 0);
  w[0] = 1;
  for (const mpq_class& d : diag) {
    // (1 - d r^2 / 2)^(1/2) by the binomial series.
    std::vector<mpq_class> f(static_cast<std::size_t>(K) + 1);
    mpq_class b = 1, a = -d / 2;
    mpq_class ak = 1;
    for (int k = 0; k <= K; ++k) {
      f[k] = b * ak;
      b = b * (mpq_class(1, 2) - k) / (k + 1);
      ak *= a;
    }
    std::vector<mpq_class> g(static_cast<std::size_t>(K) + 1, 0);
    for (int i = 0; i <= K; ++i)
      for (int j = 0; i + j <= K; ++j) g[i + j] += w[i] * f[j];
    w = g;
  }
  return w;
}

std::vector<mpq_class> muFromEigenvalues(const std::vector<mpq_class>& diag, const mpq_class& n, int Nmax) {
  std::vector<mpq_class> w = wFromEigenvalues(diag, Nmax);
  // L = w'' - (n-1)/r w', coefficient of r^{2k-2} from c_k.
  std::vector<mpq_class> L(static_cast<std::size_t>(Nmax), 0);
  for (int k = 1; k <= Nmax; ++k) L[k - 1] = (mpq_class(2 * k * (2 * k - 1)) - (n - 1) * 2 * k) * w[k];
  // h = -L / w
  std::vector<mpq_class> h(static_cast<std::size_t>(Nmax), 0);
  for (int k = 0; k < Nmax; ++k) {
    mpq_class s = -L[k];
    for (int j = 1; j <= k; ++j) s -= w[j] * h[k - j];
    h[k] = s;
  }
  std::vector<mpq_class> mu(static_cast<std::size_t>(Nmax) + 1, 0);
  for (int N = 1; N <= Nmax; ++N) {
    mpq_class f = fact(N - 1);
    mu[N] = h[N - 1] * f * f;
    for (int i = 1; i < N; ++i) mu[N] *= 4;
  }
  return mu;
}

}  // namespace oracle
