// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjms/matrix.hpp"

#include <stdexcept>

namespace gjms {

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const std::vector<Rational>& diag) {
  Matrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.d_; ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::fromRows(const std::vector<std::vector<Rational>>& rows) {
  Matrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.d_; ++i) {
    if (static_cast<int>(rows[i].size()) != m.d_) throw std::invalid_argument("matrix is not square");
    for (int j = 0; j < m.d_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Rational Matrix::trace() const {
  Rational t;
  for (int i = 0; i < d_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::isSymmetric() const {
  for (int i = 0; i < d_; ++i)
    for (int j = i + 1; j < d_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool Matrix::isZero() const {
  for (const auto& x : a_)
    if (!x.isZero()) return false;
  return true;
}

Matrix Matrix::pow(int e) const {
  if (e < 0) throw std::domain_error("negative matrix power");
  Matrix r = identity(d_);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

std::string Matrix::str() const {
  std::string s = "[";
  for (int i = 0; i < d_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < d_; ++j) s += (j ? "," : "") + (*this)(i, j).str();
    s += "]";
  }
  return s + "]";
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (d_ != o.d_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (d_ != o.d_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.d_ != b.d_) throw std::invalid_argument("matrix dimension mismatch");
  Matrix c(a.d_);
  for (int i = 0; i < a.d_; ++i)
    for (int k = 0; k < a.d_; ++k) {
      const Rational& x = a(i, k);
      if (x.isZero()) continue;
      for (int j = 0; j < a.d_; ++j)
        if (!b(k, j).isZero()) c(i, j) += x * b(k, j);
    }
  return c;
}

std::vector<Rational> powerSums(const Matrix& P, int K) {
  std::vector<Rational> p;
  Matrix power = Matrix::identity(P.dim());
  for (int k = 1; k <= K; ++k) {
    power = power * P;
    p.push_back(power.trace());
  }
  return p;
}

}  // namespace gjms
