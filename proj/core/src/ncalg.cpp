// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjms/ncalg.hpp"

namespace gjms {

std::string Word::str() const {
  if (isIdentity()) return "1";
  std::string s;
  for (int a : left.entries()) {
    if (!s.empty()) s += " ";
    s += "P" + std::to_string(2 * a);
  }
  for (int b : right.entries()) {
    if (!s.empty()) s += " ";
    s += "Pbar" + std::to_string(2 * b);
  }
  return s;
}

Word compose(const Word& a, const Word& b) {
  if (a.right.empty()) return {a.left.concat(b.left), b.right};
  if (b.left.empty()) return {a.left, a.right.concat(b.right)};
  throw std::domain_error("composition of " + a.str() + " with " + b.str() + " is not a word");
}

NCSum mulLeft(const NCSum& w, const Composition& p) {
  NCSum out;
  for (const auto& [word, c] : w.terms()) out.add({p.concat(word.left), word.right}, c);
  return out;
}

NCSum mulRight(const NCSum& w, const Composition& pbar) {
  NCSum out;
  for (const auto& [word, c] : w.terms()) out.add({word.left, word.right.concat(pbar)}, c);
  return out;
}

Word adjointWord(const Word& w) {
  if (w.left.empty() || w.right.empty()) return {w.left.reversed(), w.right.reversed()};
  return {w.right.reversed(), w.left.reversed()};
}

Word sigmaWord(const Word& w) { return {w.right.reversed(), w.left.reversed()}; }

NCSum adjoint(const NCSum& w) { return mapWords(w, &adjointWord); }
NCSum sigma(const NCSum& w) { return mapWords(w, &sigmaWord); }

PolyNCSum toPolyNCSum(const NCSum& w) {
  PolyNCSum out;
  for (const auto& [word, c] : w.terms()) out.add(word, Poly(c));
  return out;
}

MuPoly::MuPoly(std::vector<NCSum> coeffs) : c_(std::move(coeffs)) { trim(); }

void MuPoly::trim() {
  while (!c_.empty() && c_.back().isZero()) c_.pop_back();
}

NCSum MuPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[k];
}

void MuPoly::addTerm(int power, const NCSum& s) {
  if (power < 0) throw std::invalid_argument("negative power of mu");
  if (static_cast<int>(c_.size()) <= power) c_.resize(power + 1);
  c_[power] += s;
  trim();
}

NCSum MuPoly::evaluate(const Rational& mu) const {
  NCSum acc;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * mu + c_[k];
  return acc;
}

MuPoly MuPoly::substituteAffine(const Rational& a, const Rational& b) const {
  // (a mu + b)^k expanded binomially.
  std::vector<NCSum> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    for (std::size_t i = 0; i <= k; ++i) {
      Rational f = binomial(static_cast<long>(k), static_cast<long>(i)) * a.pow(static_cast<long>(i)) *
                   b.pow(static_cast<long>(k - i));
      out[i] += c_[k] * f;
    }
  }
  return MuPoly(std::move(out));
}

MuPoly MuPoly::mapCoefficients(NCSum (*f)(const NCSum&)) const {
  std::vector<NCSum> out;
  out.reserve(c_.size());
  for (const auto& s : c_) out.push_back(f(s));
  return MuPoly(std::move(out));
}

MuPoly& MuPoly::operator+=(const MuPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

MuPoly& MuPoly::operator-=(const MuPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

std::size_t MuPoly::wordCount() const {
  std::size_t n = 0;
  for (const auto& s : c_) n += s.size();
  return n;
}

std::string MuPoly::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k].isZero()) continue;
    if (!out.empty()) out += " + ";
    out += "[" + c_[k].str() + "]";
    if (k > 0) out += " mu";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace gjms
