#include "mtt/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mtt {

std::string EdgeVar::to_string() const {
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

EdgeVar edge_var(Index i, Index j) {
  if (i < 1 || j <= i) {
    throw std::invalid_argument("edge_var: require 1 <= i < j, got (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
  }
  return EdgeVar{i, j};
}

Monomial Monomial::variable(EdgeVar v) {
  Monomial m;
  m.factors_.emplace_back(v, 1);
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() && b != o.factors_.end()) {
    if (a->first < b->first) {
      out.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, o.factors_.end());
  return out;
}

bool Monomial::is_squarefree() const {
  for (const auto& [v, e] : factors_) {
    if (e != 1) return false;
  }
  return true;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : factors_) d += e;
  return d;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [v, e] : factors_) {
    if (!first) out << '*';
    first = false;
    out << v.to_string();
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

Polynomial::Polynomial(Rational constant) {
  if (!constant.is_zero()) {
    terms_.emplace(Monomial{}, std::move(constant));
  }
}

Polynomial Polynomial::variable(EdgeVar v) {
  return term(Rational(1), Monomial::variable(v));
}

Polynomial Polynomial::term(Rational coeff, Monomial m) {
  Polynomial p;
  if (!coeff.is_zero()) {
    p.terms_.emplace(std::move(m), std::move(coeff));
  }
  return p;
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  const auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out;
  if (c.is_zero()) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Rational Polynomial::evaluate(
    const std::function<Rational(EdgeVar)>& value_of) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational prod = c;
    for (const auto& [v, e] : m.factors()) {
      const Rational val = value_of(v);
      for (int k = 0; k < e; ++k) prod *= val;
    }
    acc += prod;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.to_string();
    if (!m.is_constant()) out << '*' << m.to_string();
  }
  return out.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

std::optional<Polynomial::Difference> Polynomial::first_difference(
    const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() ||
        (ia != a.terms_.end() && ia->first < ib->first)) {
      return Difference{ia->first, ia->second, Rational(0)};
    }
    if (ia == a.terms_.end() || ib->first < ia->first) {
      return Difference{ib->first, Rational(0), ib->second};
    }
    if (ia->second != ib->second) {
      return Difference{ia->first, ia->second, ib->second};
    }
    ++ia;
    ++ib;
  }
  return std::nullopt;
}

Polynomial derivative(const Polynomial& p, EdgeVar v) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    int exponent = 0;
    Monomial rest;
    for (const auto& [var, exp] : m.factors()) {
      if (var == v) exponent = exp;
      const int keep = (var == v) ? exp - 1 : exp;
      for (int k = 0; k < keep; ++k) rest = rest * Monomial::variable(var);
    }
    if (exponent == 0) continue;
    out += Polynomial::term(Rational(exponent) * c, rest);
  }
  return out;
}

}  // namespace mtt
