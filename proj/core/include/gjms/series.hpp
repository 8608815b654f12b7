// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gjms/matrix.hpp"
#include "gjms/poly.hpp"
#include "gjms/rational.hpp"

namespace gjms {

// Ring plumbing for series coefficients. Matrices need a prototype for size.
template <class R>
struct RingTraits {
  static R zeroLike(const R&) { return R(0); }
  static R oneLike(const R&) { return R(1); }
  static bool isZero(const R& x) { return x.isZero(); }
  static constexpr bool commutative = true;
  static std::string str(const R& x) { return x.str(); }
};

template <>
struct RingTraits<Matrix> {
  static Matrix zeroLike(const Matrix& p) { return Matrix(p.dim()); }
  static Matrix oneLike(const Matrix& p) { return Matrix::identity(p.dim()); }
  static bool isZero(const Matrix& x) { return x.isZero(); }
  static constexpr bool commutative = false;
  static std::string str(const Matrix& x) { return x.str(); }
};

// Even power series sum_{k=0}^{K} c_k r^{2k}.
template <class R>
class TruncatedSeries {
 public:
  using Traits = RingTraits<R>;

  TruncatedSeries() = default;
  // Pads with zeros (or truncates) to order K; coeffs must be nonempty.
  TruncatedSeries(std::vector<R> coeffs, int K) : c_(std::move(coeffs)), K_(K) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
    if (K < 0) throw std::invalid_argument("negative truncation order");
    R z = Traits::zeroLike(c_[0]);
    c_.resize(static_cast<std::size_t>(K) + 1, z);
  }
  static TruncatedSeries constant(const R& c, int K) { return TruncatedSeries({c}, K); }

  int order() const { return K_; }
  const std::vector<R>& coefficients() const { return c_; }
  const R& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  R& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  R zero() const { return Traits::zeroLike(c_[0]); }
  R one() const { return Traits::oneLike(c_[0]); }

  TruncatedSeries truncated(int K) const {
    std::vector<R> c(c_.begin(), c_.begin() + std::min(K, K_) + 1);
    return TruncatedSeries(std::move(c), std::min(K, K_));
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    shrinkTo(o.K_);
    for (int k = 0; k <= K_; ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    shrinkTo(o.K_);
    for (int k = 0; k <= K_; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int K = std::min(a.K_, b.K_);
    std::vector<R> c(static_cast<std::size_t>(K) + 1, a.zero());
    for (int i = 0; i <= K; ++i) {
      if (Traits::isZero(a.c_[i])) continue;
      for (int j = 0; i + j <= K; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(std::move(c), K);
  }
  template <class S>
  TruncatedSeries scaled(const S& s) const {
    TruncatedSeries t = *this;
    for (auto& x : t.c_) x = x * s;
    return t;
  }
  TruncatedSeries operator-() const { return scaled(Rational(-1)); }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.K_ == b.K_ && a.c_ == b.c_;
  }

  // Multiplication by r^2, dropping the top coefficient.
  TruncatedSeries shiftUp() const {
    std::vector<R> c(static_cast<std::size_t>(K_) + 1, zero());
    for (int k = 0; k < K_; ++k) c[k + 1] = c_[k];
    return TruncatedSeries(std::move(c), K_);
  }
  // d^2/dr^2: c_k r^{2k} -> 2k(2k-1) c_k r^{2k-2}. Order drops by one.
  TruncatedSeries deriv2() const { return lowered(1); }
  // (1/r) d/dr: c_k r^{2k} -> 2k c_k r^{2k-2}. Order drops by one.
  TruncatedSeries radialD1() const { return lowered(0); }
  // (n-1)(1/r) d/dr.
  template <class S>
  TruncatedSeries radialOp(const S& n) const {
    return radialD1().scaled(n - S(1));
  }

  void requireUnitConstant() const {
    if (!(c_[0] == one())) throw std::domain_error("constant term is not the unit");
  }

  TruncatedSeries inverse() const {
    requireUnitConstant();
    std::vector<R> b(static_cast<std::size_t>(K_) + 1, zero());
    b[0] = one();
    for (int k = 1; k <= K_; ++k) {
      R s = zero();
      for (int j = 1; j <= k; ++j) s += c_[j] * b[k - j];
      b[k] = -s;
    }
    return TruncatedSeries(std::move(b), K_);
  }

  TruncatedSeries sqrt() const {
    requireUnitConstant();
    requireCommuting();
    std::vector<R> f(static_cast<std::size_t>(K_) + 1, zero());
    f[0] = one();
    for (int k = 1; k <= K_; ++k) {
      R s = c_[k];
      for (int j = 1; j < k; ++j) s -= f[j] * f[k - j];
      f[k] = s * Rational(1, 2);
    }
    return TruncatedSeries(std::move(f), K_);
  }

  // this^e for a scalar exponent (Rational, or Poly when R = Poly).
  template <class E>
  TruncatedSeries pow(const E& e) const {
    requireUnitConstant();
    requireCommuting();
    std::vector<R> f(static_cast<std::size_t>(K_) + 1, zero());
    f[0] = one();
    for (int k = 1; k <= K_; ++k) {
      R s = zero();
      for (int j = 1; j <= k; ++j) {
        E w = (e + E(1)) * Rational(j) - E(k);
        s += (c_[j] * f[k - j]) * w;
      }
      f[k] = s * Rational(1, k);
    }
    return TruncatedSeries(std::move(f), K_);
  }

  // exp of a series with zero constant term.
  TruncatedSeries exp() const {
    if (!Traits::isZero(c_[0])) throw std::domain_error("exp needs a zero constant term");
    requireCommuting();
    std::vector<R> f(static_cast<std::size_t>(K_) + 1, zero());
    f[0] = one();
    for (int k = 1; k <= K_; ++k) {
      R s = zero();
      for (int j = 1; j <= k; ++j) s += (c_[j] * f[k - j]) * Rational(j);
      f[k] = s * Rational(1, k);
    }
    return TruncatedSeries(std::move(f), K_);
  }

  void requireCommuting() const {
    if constexpr (!Traits::commutative) {
      for (int i = 1; i <= K_; ++i)
        for (int j = i + 1; j <= K_; ++j)
          if (!(c_[i] * c_[j] == c_[j] * c_[i])) throw std::domain_error("matrix coefficients do not commute");
    }
  }

  std::string str() const {
    std::string s;
    for (int k = 0; k <= K_; ++k) {
      if (Traits::isZero(c_[k])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + Traits::str(c_[k]) + ")";
      if (k > 0) s += "*r^" + std::to_string(2 * k);
    }
    return s.empty() ? "0" : s + " + O(r^" + std::to_string(2 * K_ + 2) + ")";
  }

 private:
  void shrinkTo(int K) {
    if (K < K_) {
      c_.resize(static_cast<std::size_t>(K) + 1);
      K_ = K;
    }
  }
  // second = 1: d^2/dr^2, second = 0: (1/r) d/dr.
  TruncatedSeries lowered(int second) const {
    if (K_ == 0) return TruncatedSeries({zero()}, 0);
    std::vector<R> c(static_cast<std::size_t>(K_), zero());
    for (int k = 1; k <= K_; ++k) {
      Rational f = second ? Rational(2 * k * (2 * k - 1)) : Rational(2 * k);
      c[k - 1] = c_[k] * f;
    }
    return TruncatedSeries(std::move(c), K_ - 1);
  }

  std::vector<R> c_;
  int K_ = 0;
};

// det(1 - (r^2/2) P) from power sums p_1..p_K via exp(-sum p_k t^k / k), t = r^2/2.
template <class R>
TruncatedSeries<R> detSeriesFromPowerSums(const std::vector<R>& p, int K) {
  if (static_cast<int>(p.size()) < K) throw std::invalid_argument("not enough power sums");
  R z = RingTraits<R>::zeroLike(p.empty() ? R(0) : p[0]);
  std::vector<R> g(static_cast<std::size_t>(K) + 1, z);
  for (int k = 1; k <= K; ++k) g[k] = p[k - 1] * (Rational(-1, k) / Rational(2).pow(k));
  return TruncatedSeries<R>(std::move(g), K).exp();
}

TruncatedSeries<Rational> detSeries(const Matrix& P, int K);

// Doubly indexed series sum c_{ij} r^{2i} s^{2j}, 0 <= i, j <= K.
template <class R>
class BiSeries {
 public:
  using Traits = RingTraits<R>;

  BiSeries() = default;
  BiSeries(const R& proto, int K)
      : c_(static_cast<std::size_t>(K + 1) * (K + 1), Traits::zeroLike(proto)), K_(K) {}

  int order() const { return K_; }
  R& at(int i, int j) { return c_.at(index(i, j)); }
  const R& at(int i, int j) const { return c_.at(index(i, j)); }
  R zero() const { return Traits::zeroLike(c_[0]); }

  // f(r^2 + s^2); f must be known to order 2K.
  static BiSeries ofSum(const TruncatedSeries<R>& f, int K) {
    if (f.order() < 2 * K) throw std::invalid_argument("univariate series too short");
    BiSeries b(f[0], K);
    for (int i = 0; i <= K; ++i)
      for (int j = 0; j <= K; ++j) b.at(i, j) = f[i + j] * binomial(i + j, i);
    return b;
  }
  // f(r^2) or f(s^2).
  static BiSeries inR(const TruncatedSeries<R>& f, int K) {
    BiSeries b(f[0], K);
    for (int i = 0; i <= std::min(K, f.order()); ++i) b.at(i, 0) = f[i];
    return b;
  }
  static BiSeries inS(const TruncatedSeries<R>& f, int K) {
    BiSeries b(f[0], K);
    for (int j = 0; j <= std::min(K, f.order()); ++j) b.at(0, j) = f[j];
    return b;
  }

  // Coefficient of s^{2j} as a series in r, and of r^{2i} as a series in s.
  TruncatedSeries<R> sCoefficient(int j) const {
    std::vector<R> c;
    for (int i = 0; i <= K_; ++i) c.push_back(at(i, j));
    return TruncatedSeries<R>(std::move(c), K_);
  }
  TruncatedSeries<R> rCoefficient(int i) const {
    std::vector<R> c;
    for (int j = 0; j <= K_; ++j) c.push_back(at(i, j));
    return TruncatedSeries<R>(std::move(c), K_);
  }

  BiSeries& operator+=(const BiSeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  BiSeries& operator-=(const BiSeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    a.check(b);
    BiSeries c(a.c_[0], a.K_);
    for (int i1 = 0; i1 <= a.K_; ++i1)
      for (int j1 = 0; j1 <= a.K_; ++j1) {
        const R& x = a.at(i1, j1);
        if (Traits::isZero(x)) continue;
        for (int i2 = 0; i1 + i2 <= a.K_; ++i2)
          for (int j2 = 0; j1 + j2 <= a.K_; ++j2) c.at(i1 + i2, j1 + j2) += x * b.at(i2, j2);
      }
    return c;
  }
  template <class S>
  BiSeries scaled(const S& s) const {
    BiSeries t = *this;
    for (auto& x : t.c_) x = x * s;
    return t;
  }
  friend bool operator==(const BiSeries& a, const BiSeries& b) { return a.K_ == b.K_ && a.c_ == b.c_; }

  // Inverse, computed as a series in s with coefficients series in r.
  BiSeries inverse() const {
    if (!(at(0, 0) == Traits::oneLike(c_[0]))) throw std::domain_error("constant term is not the unit");
    BiSeries out(c_[0], K_);
    TruncatedSeries<R> a0inv = sCoefficient(0).inverse();
    std::vector<TruncatedSeries<R>> b;
    for (int j = 0; j <= K_; ++j) {
      TruncatedSeries<R> s = j == 0 ? TruncatedSeries<R>::constant(Traits::oneLike(c_[0]), K_)
                                    : TruncatedSeries<R>::constant(zero(), K_);
      for (int l = 1; l <= j; ++l) s -= sCoefficient(l) * b[j - l];
      b.push_back(a0inv * s);
      for (int i = 0; i <= K_; ++i) out.at(i, j) = b.back()[i];
    }
    return out;
  }

  // d^2/dr^2, (1/r) d/dr and the s analogues; the differentiated index loses its top entry.
  BiSeries d2r() const { return lower(true, true); }
  BiSeries d1r() const { return lower(true, false); }
  BiSeries d2s() const { return lower(false, true); }
  BiSeries d1s() const { return lower(false, false); }
  // Multiplication by r^2.
  BiSeries shiftR() const {
    BiSeries out(c_[0], K_);
    for (int i = 0; i < K_; ++i)
      for (int j = 0; j <= K_; ++j) out.at(i + 1, j) = at(i, j);
    return out;
  }

 private:
  std::size_t index(int i, int j) const {
    if (i < 0 || j < 0 || i > K_ || j > K_) throw std::out_of_range("bi-series index");
    return static_cast<std::size_t>(i) * (K_ + 1) + j;
  }
  void check(const BiSeries& o) const {
    if (o.K_ != K_) throw std::invalid_argument("bi-series order mismatch");
  }
  BiSeries lower(bool inR, bool second) const {
    BiSeries out(c_[0], K_);
    for (int i = 0; i <= K_; ++i)
      for (int j = 0; j <= K_; ++j) {
        int k = inR ? i : j;
        if (k == 0) continue;
        Rational f = second ? Rational(2 * k * (2 * k - 1)) : Rational(2 * k);
        if (inR)
          out.at(i - 1, j) = at(i, j) * f;
        else
          out.at(i, j - 1) = at(i, j) * f;
      }
    return out;
  }

  std::vector<R> c_;
  int K_ = 0;
};

}  // namespace gjms
