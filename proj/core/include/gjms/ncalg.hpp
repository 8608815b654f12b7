// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gjms/composition.hpp"
#include "gjms/poly.hpp"
#include "gjms/rational.hpp"

namespace gjms {

// P_{2I} i* Pbar_{2J}; the empty/empty word is the bare restriction i*.
struct Word {
  Composition left;
  Composition right;

  static Word identity() { return {}; }
  static Word leftOnly(Composition I) { return {std::move(I), {}}; }
  static Word rightOnly(Composition J) { return {{}, std::move(J)}; }

  bool isIdentity() const { return left.empty() && right.empty(); }
  int size() const { return left.size() + right.size(); }
  std::string str() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

namespace detail {
inline bool isZeroCoeff(const Rational& c) { return c.isZero(); }
inline bool isZeroCoeff(const Poly& c) { return c.isZero(); }
inline std::string coeffString(const Rational& c) { return c.str(); }
inline std::string coeffString(const Poly& c) { return "(" + c.str() + ")"; }
}  // namespace detail

// Finite linear combination of words with no zero coefficients.
template <class C>
class BasicNCSum {
 public:
  using Coeff = C;

  BasicNCSum() = default;
  static BasicNCSum single(const Word& w, const C& c = C(1)) {
    BasicNCSum s;
    s.add(w, c);
    return s;
  }

  const std::map<Word, C>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool isZero() const { return terms_.empty(); }

  C coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C(0) : it->second;
  }

  void add(const Word& w, const C& c) {
    if (detail::isZeroCoeff(c)) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (detail::isZeroCoeff(it->second)) terms_.erase(it);
    }
  }

  BasicNCSum& operator+=(const BasicNCSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  BasicNCSum& operator-=(const BasicNCSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  BasicNCSum& operator*=(const C& s) {
    if (detail::isZeroCoeff(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }

  friend BasicNCSum operator+(BasicNCSum a, const BasicNCSum& b) { return a += b; }
  friend BasicNCSum operator-(BasicNCSum a, const BasicNCSum& b) { return a -= b; }
  friend BasicNCSum operator*(BasicNCSum a, const C& s) { return a *= s; }
  friend BasicNCSum operator*(const C& s, BasicNCSum a) { return a *= s; }
  BasicNCSum operator-() const { return *this * C(-1); }

  friend bool operator==(const BasicNCSum&, const BasicNCSum&) = default;

  // Human-readable rendering, e.g. "3 P2 P2 P2 - 2 P2 P4 - 2 P4 P2 + P6".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string cs = detail::coeffString(c);
      bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs.erase(0, 1);
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (cs != "1" || w.isIdentity()) {
        out += cs;
        if (!w.isIdentity()) out += " ";
      }
      if (!w.isIdentity()) out += w.str();
    }
    return out;
  }

 private:
  std::map<Word, C> terms_;
};

using NCSum = BasicNCSum<Rational>;
using PolyNCSum = BasicNCSum<Poly>;

// Operator composition of two words. Defined when the first word has no
// Pbar part or the second has no P part:
//   (I, {}) * (I', J') = (I I', J'),   (I, J) * ({}, J') = (I, J J').
Word compose(const Word& a, const Word& b);

template <class C>
BasicNCSum<C> operator*(const BasicNCSum<C>& a, const BasicNCSum<C>& b) {
  BasicNCSum<C> out;
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add(compose(wa, wb), ca * cb);
  return out;
}

template <class C>
BasicNCSum<C> mapWords(const BasicNCSum<C>& s, Word (*f)(const Word&)) {
  BasicNCSum<C> out;
  for (const auto& [w, c] : s.terms()) out.add(f(w), c);
  return out;
}

// Prepends p to every P side.
NCSum mulLeft(const NCSum& w, const Composition& p);
// Appends pbar to every Pbar side.
NCSum mulRight(const NCSum& w, const Composition& pbar);

// Formal adjoint. One-sided words are reversed in place; two-sided words
// P_I i* Pbar_J go to P_{J^-1} i* Pbar_{I^-1}.
Word adjointWord(const Word& w);
// (I, J) -> (J^-1, I^-1).
Word sigmaWord(const Word& w);

NCSum adjoint(const NCSum& w);
NCSum sigma(const NCSum& w);
PolyNCSum toPolyNCSum(const NCSum& w);

// Polynomial in mu with NCSum coefficients; trailing zeros trimmed.
class MuPoly {
 public:
  MuPoly() = default;
  explicit MuPoly(std::vector<NCSum> coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<NCSum>& coefficients() const { return c_; }
  NCSum coefficient(int k) const;

  void addTerm(int power, const NCSum& s);
  NCSum evaluate(const Rational& mu) const;
  // mu -> a*mu + b
  MuPoly substituteAffine(const Rational& a, const Rational& b) const;
  MuPoly mapCoefficients(NCSum (*f)(const NCSum&)) const;

  MuPoly& operator+=(const MuPoly& o);
  MuPoly& operator-=(const MuPoly& o);
  friend MuPoly operator+(MuPoly a, const MuPoly& b) { return a += b; }
  friend MuPoly operator-(MuPoly a, const MuPoly& b) { return a -= b; }
  friend bool operator==(const MuPoly&, const MuPoly&) = default;

  bool isZero() const { return c_.empty(); }
  std::size_t wordCount() const;
  std::string str() const;

 private:
  void trim();
  std::vector<NCSum> c_;
};

}  // namespace gjms
