// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "gjms/rational.hpp"

namespace gjms {

// Dense square matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : d_(dim), a_(static_cast<std::size_t>(dim) * dim) {}
  static Matrix identity(int dim);
  static Matrix diagonal(const std::vector<Rational>& diag);
  // Throws std::invalid_argument unless rows form a square matrix.
  static Matrix fromRows(const std::vector<std::vector<Rational>>& rows);

  int dim() const { return d_; }
  Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * d_ + j]; }
  const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * d_ + j]; }

  Rational trace() const;
  bool isSymmetric() const;
  bool isZero() const;
  Matrix pow(int e) const;
  std::string str() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }
  Matrix operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int d_ = 0;
  std::vector<Rational> a_;
};

// Power sums tr(P^k), k = 1..K.
std::vector<Rational> powerSums(const Matrix& P, int K);

}  // namespace gjms
