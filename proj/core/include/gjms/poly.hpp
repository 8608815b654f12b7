// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gjms/rational.hpp"

namespace gjms {

using VarId = int;
constexpr int kMaxVars = 16;

// Interns an indeterminate name. The ids of "n", "lambda", "Delta", "mu", "x"
// are fixed; other names get ids in first-use order.
VarId varId(std::string_view name);
const std::string& varName(VarId id);

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int degree(VarId v) const { return e[v]; }
  int totalDegree() const;
  bool isOne() const;
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Indeterminate name -> value.
using EvalPoint = std::map<std::string, Rational>;

// Sparse multivariate polynomial over Q in named indeterminates.
class Poly {
 public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT

  static Poly variable(std::string_view name);
  static Poly variable(VarId v);
  static Poly monomial(const Monomial& m, const Rational& c);

  // Terms sorted by monomial, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  // Throws std::domain_error unless the polynomial is constant.
  Rational constantValue() const;
  Rational constantTerm() const;
  Rational coefficientOf(const Monomial& m) const;

  int degree(VarId v) const;
  int totalDegree() const;
  std::vector<VarId> variables() const;

  // Coefficients with respect to v; entry k is the coefficient of v^k.
  std::vector<Poly> coefficients(VarId v) const;
  // Dense coefficients of a polynomial in v alone; throws if other variables occur.
  std::vector<Rational> univariateCoefficients(VarId v) const;
  static Poly fromCoefficients(VarId v, const std::vector<Rational>& c);
  static Poly fromCoefficients(VarId v, const std::vector<Poly>& c);

  Poly derivative(VarId v) const;
  Poly substitute(VarId v, const Poly& value) const;
  // Substitutes the assigned indeterminates, leaving the rest symbolic.
  Poly partialEvaluate(const EvalPoint& at) const;
  // Every indeterminate must be assigned.
  Rational evaluate(const EvalPoint& at) const;
  // Univariate evaluation; the polynomial may involve only v.
  Rational evaluate(VarId v, const Rational& at) const;

  Poly pow(int e) const;
  std::string str() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly& operator/=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator/(Poly a, const Rational& c) { return a /= c; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  void normalize();
  std::vector<Term> terms_;
};

// Exact quotient p / (v - root). Throws std::domain_error("not a root") when
// p(root) != 0 as a polynomial in the remaining indeterminates.
Poly exactDivideByLinear(const Poly& p, VarId v, const Rational& root);
// Same for a univariate polynomial, using its single indeterminate.
Poly exactDivideByLinear(const Poly& p, const Rational& root);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace gjms
