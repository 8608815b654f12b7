// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjms/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gjms {

Composition::Composition(std::vector<int> entries) : e_(std::move(entries)) {
  for (int x : e_)
    if (x < 1) throw std::invalid_argument("composition entries must be positive");
  size_ = std::accumulate(e_.begin(), e_.end(), 0);
}

int Composition::first() const {
  if (e_.empty()) throw std::out_of_range("empty composition");
  return e_.front();
}

int Composition::last() const {
  if (e_.empty()) throw std::out_of_range("empty composition");
  return e_.back();
}

Composition Composition::reversed() const {
  std::vector<int> r(e_.rbegin(), e_.rend());
  return Composition(std::move(r));
}

Composition Composition::concat(const Composition& o) const {
  std::vector<int> r = e_;
  r.insert(r.end(), o.e_.begin(), o.e_.end());
  return Composition(std::move(r));
}

Composition Composition::slice(int i, int j) const {
  return Composition(std::vector<int>(e_.begin() + i, e_.begin() + j));
}

std::string Composition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

namespace {

void extend(int remaining, std::vector<int>& prefix, std::vector<Composition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int a = 1; a <= remaining; ++a) {
    prefix.push_back(a);
    extend(remaining - a, prefix, out);
    prefix.pop_back();
  }
}

void requireNonEmpty(const Composition& I) {
  if (I.empty()) throw std::invalid_argument("coefficient of the empty composition");
}

}  // namespace

std::vector<Composition> enumerateCompositions(int N) {
  if (N < 1) throw std::invalid_argument("compositions of a non-positive integer");
  std::vector<Composition> out;
  out.reserve(std::size_t{1} << (N - 1));
  std::vector<int> prefix;
  extend(N, prefix, out);
  return out;
}

Rational mcoeff(const Composition& I) {
  requireNonEmpty(I);
  const int N = I.size();
  const int r = I.length();
  Rational m = factorial(N) * factorial(N - 1);
  if (r % 2 == 0) m = -m;
  for (int j = 0; j < r; ++j) m /= factorial(I[j]) * factorial(I[j] - 1);
  for (int j = 0; j + 1 < r; ++j) m /= Rational(I[j] + I[j + 1]);
  return m;
}

Rational ncoeff(const Composition& I) {
  requireNonEmpty(I);
  const int r = I.length();
  Rational n(1);
  int left = 0;
  for (int j = 0; j < r; ++j) {
    left += I[j];
    int right = I.size() - left + I[j];
    n *= binomial(left - 1, I[j] - 1) * binomial(right - 1, I[j] - 1);
  }
  return n;
}

Rational ncoeffReduced(const Composition& I) {
  requireNonEmpty(I);
  const int N = I.size();
  const int r = I.length();
  Rational n = factorial(N - 1).pow(2);
  for (int j = 0; j < r; ++j) n /= factorial(I[j] - 1).pow(2);
  int left = 0;
  for (int j = 0; j + 1 < r; ++j) {
    left += I[j];
    n /= Rational(left) * Rational(N - left);
  }
  return n;
}

Rational splitFirstResidual(const Composition& I) {
  requireNonEmpty(I);
  const int N = I.size();
  Rational lhs = -Rational(N - I.first()) * mcoeff(I);
  Rational rhs;
  int S = 0;
  for (int t = 1; t < I.length(); ++t) {
    S += I[t - 1];
    rhs += binomial(N - 1, S).pow(2) * Rational(S) * mcoeff(I.slice(0, t)) *
           mcoeff(I.slice(t, I.length()));
  }
  return lhs - rhs;
}

Rational splitLastResidual(const Composition& J) {
  requireNonEmpty(J);
  const int N = J.size();
  Rational lhs = -Rational(N - J.last()) * mcoeff(J);
  Rational rhs;
  for (int t = 1; t < J.length(); ++t) {
    int T = J.slice(t, J.length()).size();
    rhs += binomial(N - 1, T).pow(2) * Rational(T) * mcoeff(J.slice(0, t)) *
           mcoeff(J.slice(t, J.length()));
  }
  return lhs - rhs;
}

}  // namespace gjms
