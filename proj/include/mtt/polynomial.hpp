#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtt/matrix.hpp"

namespace mtt {

// The indeterminate x_{i,j} attached to the off-diagonal matrix
// position (i,j), i < j.
struct EdgeVar {
  Index i;
  Index j;
  friend auto operator<=>(const EdgeVar&, const EdgeVar&) = default;
  std::string to_string() const;  // "x_1_2"
};

EdgeVar edge_var(Index i, Index j);

// Product of edge variables with positive exponents, kept sorted by
// variable. The empty product is 1.
class Monomial {
 public:
  Monomial() = default;
  static Monomial variable(EdgeVar v);

  Monomial operator*(const Monomial& o) const;

  bool is_constant() const { return factors_.empty(); }
  bool is_squarefree() const;
  int total_degree() const;
  const std::vector<std::pair<EdgeVar, int>>& factors() const {
    return factors_;
  }

  std::string to_string() const;  // "x_1_2*x_1_3^2"; "1" when constant

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<EdgeVar, int>> factors_;
};

// Sparse multivariate polynomial over Rational in edge variables.
// Canonical form: zero coefficients are never stored, terms are keyed
// by monomial in lexicographic order, so equality is structural.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int constant) : Polynomial(Rational(constant)) {}
  Polynomial(Rational constant);

  static Polynomial variable(EdgeVar v);
  static Polynomial term(Rational coeff, Monomial m);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  int total_degree() const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& c) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Rational evaluate(
      const std::function<Rational(EdgeVar)>& value_of) const;

  // Terms sorted lexicographically, each rendered "c*x_i_j*...".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

  // First monomial at which a and b have different coefficients
  // (absent coefficients count as 0); nullopt when a == b.
  struct Difference {
    Monomial monomial;
    Rational lhs;
    Rational rhs;
  };
  static std::optional<Difference> first_difference(const Polynomial& a,
                                                    const Polynomial& b);

 private:
  void add_term(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

// Partial derivative d p / d v.
Polynomial derivative(const Polynomial& p, EdgeVar v);

}  // namespace mtt

namespace Eigen {

template <>
struct NumTraits<mtt::Polynomial> : GenericNumTraits<mtt::Polynomial> {
  using Real = mtt::Polynomial;
  using NonInteger = mtt::Polynomial;
  using Nested = mtt::Polynomial;
  using Literal = mtt::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 32,
    AddCost = 200,
    MulCost = 200,
  };
  static inline mtt::Polynomial epsilon() { return mtt::Polynomial(0); }
  static inline mtt::Polynomial dummy_precision() {
    return mtt::Polynomial(0);
  }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
