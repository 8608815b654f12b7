// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "gjms/rational.hpp"

namespace gjms {

// Ordered list of positive integers. The empty composition only appears as an
// empty side of a Word.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> entries);
  Composition(std::initializer_list<int> entries) : Composition(std::vector<int>(entries)) {}

  const std::vector<int>& entries() const { return e_; }
  bool empty() const { return e_.empty(); }
  int length() const { return static_cast<int>(e_.size()); }
  int size() const { return size_; }
  int operator[](std::size_t i) const { return e_[i]; }
  int first() const;
  int last() const;

  Composition reversed() const;
  Composition concat(const Composition& o) const;
  // Entries i..j-1.
  Composition slice(int i, int j) const;

  std::string str() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.e_ == b.e_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.e_ <=> b.e_; }

 private:
  std::vector<int> e_;
  int size_ = 0;
};

// All 2^{N-1} compositions of N in lexicographic order of their entry lists.
std::vector<Composition> enumerateCompositions(int N);

// m_I = -(-1)^r |I|!(|I|-1)! prod 1/(I_j!(I_j-1)!) prod_{j<r} 1/(I_j+I_{j+1}).
Rational mcoeff(const Composition& I);
// n_I as the product of binomials C(I_1+..+I_j - 1, I_j - 1) C(I_j+..+I_r - 1, I_j - 1).
Rational ncoeff(const Composition& I);
// n_I through (|I|-1)!^2 prod 1/(I_j-1)!^2 prod_{j<r} 1/((I_1+..+I_j)(I_{j+1}+..+I_r)).
Rational ncoeffReduced(const Composition& I);

// -(N - I_1) m_I minus the split sum over the first t entries. Zero when the
// quadratic relation holds.
Rational splitFirstResidual(const Composition& I);
// Mirror relation in the last entry.
Rational splitLastResidual(const Composition& J);

}  // namespace gjms
