#include "mtt/rational.hpp"

#include <cstring>
#include <ostream>
#include <stdexcept>

namespace mtt {
namespace {

void free_gmp_string(char* s) {
  void (*free_fn)(void*, size_t) = nullptr;
  mp_get_memory_functions(nullptr, nullptr, &free_fn);
  free_fn(s, std::strlen(s) + 1);
}

// Sets z from a base-10 token; the whole token must be a valid integer
// (mpz_set_str alone is too lenient: it skips whitespace).
void set_mpz_checked(mpz_t z, std::string_view token, std::string_view whole) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  const bool ok =
      !digits.empty() &&
      digits.find_first_not_of("0123456789") == std::string_view::npos;
  const std::string buf(token);
  if (!ok || mpz_set_str(z, buf.c_str(), 10) != 0) {
    throw std::invalid_argument("invalid rational literal '" +
                                std::string(whole) + "'");
  }
}

}  // namespace

Rational::Rational(long long value) {
  static_assert(sizeof(long long) == sizeof(long), "LP64 assumed");
  mpq_init(q_);
  mpq_set_si(q_, static_cast<long>(value), 1);
}

Rational::Rational(long long num, long long den) : Rational(num) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  *this /= Rational(den);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) {
    throw std::domain_error("division of rational by zero");
  }
  mpq_div(q_, q_, o.q_);
  return *this;
}

Rational Rational::parse(std::string_view text) {
  Rational r;
  mpz_t num;
  mpz_t den;
  mpz_init(num);
  mpz_init(den);
  try {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      set_mpz_checked(num, text, text);
      mpz_set_ui(den, 1);
    } else {
      set_mpz_checked(num, text.substr(0, slash), text);
      set_mpz_checked(den, text.substr(slash + 1), text);
      if (mpz_sgn(den) == 0) {
        throw std::invalid_argument("zero denominator in '" +
                                    std::string(text) + "'");
      }
    }
    mpq_set_num(r.q_, num);
    mpq_set_den(r.q_, den);
    mpq_canonicalize(r.q_);
  } catch (...) {
    mpz_clear(num);
    mpz_clear(den);
    throw;
  }
  mpz_clear(num);
  mpz_clear(den);
  return r;
}

std::string Rational::to_string() const {
  char* s = mpq_get_str(nullptr, 10, q_);
  std::string out(s);
  free_gmp_string(s);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace mtt
