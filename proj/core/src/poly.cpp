// Copyright 2026 The gjmskit Authors
// SPDX-License-Identifier: Apache-2.0

#include "gjms/poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace gjms {

namespace {

struct Registry {
  std::mutex mu;
  std::deque<std::string> names;
  Registry() {
    for (const char* n : {"n", "lambda", "Delta", "mu", "x", "y", "t"}) names.emplace_back(n);
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

Monomial mulMono(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = a.e[i] + b.e[i];
    if (s > 255) throw std::overflow_error("monomial exponent exceeds 255");
    m.e[i] = static_cast<std::uint8_t>(s);
  }
  return m;
}

}  // namespace

VarId varId(std::string_view name) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  for (std::size_t i = 0; i < r.names.size(); ++i)
    if (r.names[i] == name) return static_cast<VarId>(i);
  if (r.names.size() >= static_cast<std::size_t>(kMaxVars))
    throw std::length_error("too many indeterminates");
  r.names.emplace_back(name);
  return static_cast<VarId>(r.names.size() - 1);
}

const std::string& varName(VarId id) {
  Registry& r = registry();
  std::lock_guard<std::mutex> lock(r.mu);
  return r.names.at(static_cast<std::size_t>(id));
}

int Monomial::totalDegree() const {
  int s = 0;
  for (auto x : e) s += x;
  return s;
}

bool Monomial::isOne() const {
  return std::all_of(e.begin(), e.end(), [](std::uint8_t x) { return x == 0; });
}

Poly::Poly(const Rational& c) {
  if (!c.isZero()) terms_.emplace_back(Monomial{}, c);
}

Poly Poly::variable(VarId v) {
  Monomial m;
  m.e[v] = 1;
  return monomial(m, Rational(1));
}

Poly Poly::variable(std::string_view name) { return variable(varId(name)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (!c.isZero()) p.terms_.emplace_back(m, c);
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second.isZero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second.isZero()) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::isConstant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.isOne());
}

Rational Poly::constantValue() const {
  if (!isConstant()) throw std::domain_error("polynomial is not constant: " + str());
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Rational Poly::constantTerm() const { return coefficientOf(Monomial{}); }

Rational Poly::coefficientOf(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& k) { return t.first < k; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

int Poly::degree(VarId v) const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree(v));
  return d;
}

int Poly::totalDegree() const {
  if (terms_.empty()) return -1;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.totalDegree());
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> out;
  for (int v = 0; v < kMaxVars; ++v)
    for (const auto& t : terms_)
      if (t.first.e[v] != 0) {
        out.push_back(v);
        break;
      }
  return out;
}

std::vector<Poly> Poly::coefficients(VarId v) const {
  std::vector<Poly> out(static_cast<std::size_t>(std::max(degree(v) + 1, 0)));
  for (const auto& t : terms_) {
    Monomial m = t.first;
    int k = m.e[v];
    m.e[v] = 0;
    out[k].terms_.emplace_back(m, t.second);
  }
  for (auto& c : out) c.normalize();
  return out;
}

std::vector<Rational> Poly::univariateCoefficients(VarId v) const {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(degree(v) + 1, 0)));
  for (const auto& t : terms_) {
    Monomial m = t.first;
    int k = m.e[v];
    m.e[v] = 0;
    if (!m.isOne()) throw std::domain_error("polynomial is not univariate in " + varName(v));
    out[k] = t.second;
  }
  return out;
}

Poly Poly::fromCoefficients(VarId v, const std::vector<Rational>& c) {
  Poly p;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].isZero()) continue;
    Monomial m;
    m.e[v] = static_cast<std::uint8_t>(k);
    p.terms_.emplace_back(m, c[k]);
  }
  p.normalize();
  return p;
}

Poly Poly::fromCoefficients(VarId v, const std::vector<Poly>& c) {
  Poly p;
  for (std::size_t k = 0; k < c.size(); ++k) {
    for (const auto& t : c[k].terms_) {
      if (t.first.e[v] != 0) throw std::domain_error("coefficient depends on the main variable");
      Monomial m = t.first;
      m.e[v] = static_cast<std::uint8_t>(k);
      p.terms_.emplace_back(m, t.second);
    }
  }
  p.normalize();
  return p;
}

Poly Poly::derivative(VarId v) const {
  Poly p;
  for (const auto& t : terms_) {
    if (t.first.e[v] == 0) continue;
    Monomial m = t.first;
    Rational c = t.second * Rational(m.e[v]);
    m.e[v] -= 1;
    p.terms_.emplace_back(m, c);
  }
  p.normalize();
  return p;
}

Poly Poly::substitute(VarId v, const Poly& value) const {
  auto cs = coefficients(v);
  Poly acc;
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * value + cs[k];
  return acc;
}

Poly Poly::partialEvaluate(const EvalPoint& at) const {
  std::vector<std::pair<VarId, Rational>> assigned;
  for (const auto& [name, value] : at) assigned.emplace_back(varId(name), value);
  Poly p;
  for (const auto& t : terms_) {
    Monomial m = t.first;
    Rational c = t.second;
    for (const auto& [v, value] : assigned) {
      if (m.e[v] == 0) continue;
      c *= value.pow(m.e[v]);
      m.e[v] = 0;
    }
    p.terms_.emplace_back(m, c);
  }
  p.normalize();
  return p;
}

Rational Poly::evaluate(const EvalPoint& at) const {
  Poly p = partialEvaluate(at);
  if (!p.isConstant()) throw std::domain_error("evaluation point leaves indeterminates unassigned: " + p.str());
  return p.constantValue();
}

Rational Poly::evaluate(VarId v, const Rational& at) const {
  auto cs = univariateCoefficients(v);
  Rational acc;
  for (std::size_t k = cs.size(); k-- > 0;) acc = acc * at + cs[k];
  return acc;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative power of a polynomial");
  Poly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Poly& Poly::operator+=(const Poly& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Rational c = terms_[i].second + o.terms_[j].second;
      if (!c.isZero()) out.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly p;
  if (a.isZero() || b.isZero()) return p;
  p.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) p.terms_.emplace_back(mulMono(x.first, y.first), x.second * y.second);
  p.normalize();
  return p;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly& Poly::operator/=(const Rational& c) {
  if (c.isZero()) throw std::domain_error("division by zero");
  for (auto& t : terms_) t.second /= c;
  return *this;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  struct Printed {
    int degree;
    std::vector<std::pair<std::string, int>> powers;
    const Rational* coeff;
  };
  std::vector<Printed> rows;
  for (const auto& t : terms_) {
    Printed p{t.first.totalDegree(), {}, &t.second};
    for (int v = 0; v < kMaxVars; ++v)
      if (t.first.e[v] != 0) p.powers.emplace_back(varName(v), t.first.e[v]);
    std::sort(p.powers.begin(), p.powers.end());
    rows.push_back(std::move(p));
  }
  std::sort(rows.begin(), rows.end(), [](const Printed& a, const Printed& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.powers > b.powers;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& r : rows) {
    Rational c = *r.coeff;
    bool negative = c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool needStar = false;
    if (!c.isOne() || r.powers.empty()) {
      os << c.str();
      needStar = true;
    }
    for (const auto& [name, e] : r.powers) {
      if (needStar) os << "*";
      os << name;
      if (e > 1) os << "^" << e;
      needStar = true;
    }
  }
  return os.str();
}

Poly exactDivideByLinear(const Poly& p, VarId v, const Rational& root) {
  auto cs = p.coefficients(v);
  if (cs.empty()) return Poly();
  // Synthetic division from the top coefficient down.
  std::vector<Poly> q(cs.size() - 1);
  Poly carry;
  for (std::size_t k = cs.size(); k-- > 1;) {
    carry = cs[k] + carry * root;
    q[k - 1] = carry;
  }
  Poly remainder = cs[0] + carry * root;
  if (!remainder.isZero()) throw std::domain_error("not a root");
  return Poly::fromCoefficients(v, q);
}

Poly exactDivideByLinear(const Poly& p, const Rational& root) {
  auto vars = p.variables();
  if (vars.size() > 1) throw std::domain_error("polynomial is not univariate: " + p.str());
  if (vars.empty()) {
    if (p.isZero()) return Poly();
    throw std::domain_error("not a root");
  }
  return exactDivideByLinear(p, vars[0], root);
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

}  // namespace gjms
