#include <doctest.h>

#include <sstream>

#include "mtt/rational.hpp"

using mtt::Rational;

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-1, -2) == Rational(1, 2));
  CHECK(Rational(1, -2).to_string() == "-1/2");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(8, 2).to_string() == "4");
  CHECK(Rational(4).is_integer());
  CHECK_FALSE(Rational(1, 3).is_integer());
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK(abs(Rational(-3, 5)) == Rational(3, 5));

  Rational acc;
  for (int k = 1; k <= 10; ++k) acc += Rational(1, k) - Rational(1, k);
  CHECK(acc.is_zero());
}

TEST_CASE("rational ordering and sign") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(0));
  CHECK(Rational(7, 2) > Rational(3));
  CHECK(Rational(-1, 9).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(9).sign() == 1);
}

TEST_CASE("rational zero denominators throw") {
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  Rational a(1);
  CHECK_THROWS_AS(a /= Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational parse") {
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("-7/3") == Rational(-7, 3));
  CHECK(Rational::parse("4/6") == Rational(2, 3));
  CHECK(Rational::parse("-0") == Rational(0));

  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(" 1"), std::invalid_argument);
}

TEST_CASE("rational to_string round-trips") {
  const char* samples[] = {"0", "1", "-1", "3/2", "-22/7", "1000000000000"};
  for (const auto* s : samples) {
    CHECK(Rational::parse(s).to_string() == s);
  }

  std::ostringstream out;
  out << Rational(-5, 10);
  CHECK(out.str() == "-1/2");
}

TEST_CASE("rational big values stay exact") {
  Rational p(1);
  for (int k = 0; k < 64; ++k) p *= Rational(2);
  CHECK(p.to_string() == "18446744073709551616");  // 2^64
  CHECK(p / p == Rational(1));
  CHECK((p - p).is_zero());
}
