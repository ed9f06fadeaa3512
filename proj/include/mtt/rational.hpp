#pragma once

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace mtt {

// Exact rational scalar backed by GMP. Values are kept canonical at all
// times: lowest terms, positive denominator.
class Rational {
 public:
  Rational() noexcept { mpq_init(q_); }
  Rational(int value) : Rational(static_cast<long>(value)) {}
  Rational(long value) {
    mpq_init(q_);
    mpq_set_si(q_, value, 1);
  }
  Rational(long long value);
  // num/den in lowest terms; throws std::domain_error when den == 0.
  Rational(long long num, long long den);

  Rational(const Rational& other) {
    mpq_init(q_);
    mpq_set(q_, other.q_);
  }
  Rational(Rational&& other) noexcept {
    mpq_init(q_);
    mpq_swap(q_, other.q_);
  }
  Rational& operator=(const Rational& other) {
    mpq_set(q_, other.q_);
    return *this;
  }
  Rational& operator=(Rational&& other) noexcept {
    mpq_swap(q_, other.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  // Parses "num" or "num/den" in base 10. Throws std::invalid_argument
  // on malformed input or a zero denominator.
  static Rational parse(std::string_view text);

  Rational& operator+=(const Rational& o) {
    mpq_add(q_, q_, o.q_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(q_, q_, o.q_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(q_, q_, o.q_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.q_, b.q_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return mpq_cmp(a.q_, b.q_) <=> 0;
  }

  int sign() const noexcept { return mpq_sgn(q_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const noexcept {
    return mpz_cmp_ui(mpq_denref(q_), 1) == 0;
  }

  friend Rational abs(const Rational& a) {
    Rational r;
    mpq_abs(r.q_, a.q_);
    return r;
  }

  // "num" when the denominator is 1, otherwise "num/den".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_t q_;
};

}  // namespace mtt
