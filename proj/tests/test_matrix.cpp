#include <doctest.h>

#include "helpers.hpp"
#include "mtt/errors.hpp"
#include "mtt/matrix.hpp"
#include "mtt/random_gen.hpp"
#include "oracles.hpp"

using helpers::make_matrix;
using mtt::Index;
using mtt::MatrixQ;
using mtt::Rational;

TEST_CASE("minor_matrix drops one row and column") {
  const MatrixQ m = make_matrix({{1, 2}, {3, 4}});
  const MatrixQ m11 = mtt::minor_matrix(m, 1, 1);
  CHECK(m11.rows() == 1);
  CHECK(m11(0, 0) == Rational(4));

  const MatrixQ one = make_matrix({{0}});
  CHECK(mtt::minor_matrix(one, 1, 1).rows() == 0);

  MatrixQ id3(3, 3);
  id3.setZero();
  for (Index k = 0; k < 3; ++k) id3(k, k) = Rational(1);
  const MatrixQ m23 = mtt::minor_matrix(id3, 2, 3);
  CHECK(m23 == make_matrix({{1, 0}, {0, 0}}));

  CHECK_THROWS_AS(mtt::minor_matrix(m, 0, 1), std::out_of_range);
  CHECK_THROWS_AS(mtt::minor_matrix(m, 1, 3), std::out_of_range);
}

TEST_CASE("determinant frozen values") {
  CHECK(mtt::determinant(MatrixQ(0, 0)) == Rational(1));
  CHECK(mtt::determinant(make_matrix({{-2, 1}, {1, -2}})) == Rational(3));
  CHECK(mtt::determinant(make_matrix({{1, 2}, {2, 4}})) == Rational(0));
  CHECK(mtt::determinant(make_matrix({{7}})) == Rational(7));
}

TEST_CASE("determinant matches naive expansion, n <= 5") {
  mtt::Rng rng(2024);
  for (Index n = 1; n <= 5; ++n) {
    for (int rep = 0; rep < 25; ++rep) {
      MatrixQ m(n, n);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) m(i, j) = mtt::random_rational(rng);
      }
      const Rational want = oracle::naive_determinant(m);
      CHECK(mtt::determinant(m) == want);
      CHECK(mtt::det_by_minor_expansion(m) == want);
    }
  }
}

TEST_CASE("determinant of transpose, n <= 6") {
  mtt::Rng rng(7);
  for (Index n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      MatrixQ m(n, n);
      for (Index i = 0; i < n; ++i) {
        for (Index j = 0; j < n; ++j) m(i, j) = mtt::random_rational(rng);
      }
      CHECK(mtt::determinant(m) == mtt::determinant(MatrixQ(m.transpose())));
    }
  }
}

TEST_CASE("cofactor frozen values") {
  const MatrixQ k3 = make_matrix({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}});
  CHECK(mtt::cofactor(k3, 1, 1) == Rational(3));
  CHECK(mtt::cofactor(k3, 1, 2) == Rational(3));
  CHECK(mtt::cofactor(make_matrix({{0}}), 1, 1) == Rational(1));
  CHECK_THROWS_AS(mtt::cofactor(k3, 4, 1), std::out_of_range);
}

TEST_CASE("laplace-like construction validates") {
  CHECK_NOTHROW(mtt::LaplaceLikeMatrix(
      make_matrix({{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}})));
  // not symmetric
  CHECK_THROWS_AS(
      mtt::LaplaceLikeMatrix(make_matrix({{-1, 1}, {2, -2}})),
      mtt::InvariantViolation);
  // nonzero row sum
  CHECK_THROWS_AS(mtt::LaplaceLikeMatrix(make_matrix({{1, 1}, {1, 1}})),
                  mtt::InvariantViolation);
  // not square
  CHECK_THROWS_AS(mtt::LaplaceLikeMatrix(MatrixQ(2, 3)),
                  std::invalid_argument);
}

TEST_CASE("laplace-like from upper triangle") {
  const auto L = mtt::LaplaceLikeMatrix::from_upper_triangle(
      3, {Rational(1), Rational(2), Rational(3)});
  CHECK(L.matrix() == make_matrix({{-3, 1, 2}, {1, -4, 3}, {2, 3, -5}}));
  CHECK_THROWS_AS(
      mtt::LaplaceLikeMatrix::from_upper_triangle(3, {Rational(1)}),
      std::invalid_argument);
}

TEST_CASE("common cofactor frozen values") {
  CHECK(mtt::common_cofactor(mtt::LaplaceLikeMatrix(
            make_matrix({{-3, 3}, {3, -3}}))) == Rational(-3));
  CHECK(mtt::common_cofactor(mtt::LaplaceLikeMatrix(make_matrix({{0}}))) ==
        Rational(1));
  for (Index n = 2; n <= 4; ++n) {
    MatrixQ zero(n, n);
    zero.setZero();
    CHECK(mtt::common_cofactor(mtt::LaplaceLikeMatrix(zero)) == Rational(0));
  }
}

TEST_CASE("all cofactors agree on random laplace-like matrices") {
  mtt::Rng rng(99);
  for (Index n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto L = mtt::random_laplace_like(rng, n);
      const Rational c =
          mtt::common_cofactor(L, mtt::CofactorCheck::kAll);
      CHECK(c == mtt::cofactor(L.matrix(), n, n));
    }
  }
}

TEST_CASE("all cofactors agree on random doubly balanced matrices") {
  mtt::Rng rng(100);
  for (Index n = 2; n <= 6; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      const auto D =
          mtt::random_doubly_balanced(rng, n, /*require_nonsymmetric=*/false);
      const Rational c =
          mtt::common_cofactor(D, mtt::CofactorCheck::kAll);
      CHECK(c == mtt::cofactor(D.matrix(), 1, n));
    }
  }
}

TEST_CASE("unbalanced matrices really do have unequal cofactors") {
  const MatrixQ m = make_matrix({{1, 2}, {3, 4}});
  CHECK(mtt::cofactor(m, 1, 1) != mtt::cofactor(m, 1, 2));
}

TEST_CASE("doubly balanced construction validates") {
  CHECK_NOTHROW(mtt::DoublyBalancedMatrix(
      make_matrix({{1, 2, -3}, {-4, 1, 3}, {3, -3, 0}})));
  // row sums zero, column sums not
  CHECK_THROWS_AS(
      mtt::DoublyBalancedMatrix(make_matrix({{1, -1}, {2, -2}})),
      mtt::InvariantViolation);
}

TEST_CASE("matrix parse and format round-trip") {
  const char* text = "2\n-5 5\n5 -5\n";
  const MatrixQ m = mtt::parse_square_matrix(text);
  CHECK(m == make_matrix({{-5, 5}, {5, -5}}));
  CHECK(mtt::format_matrix(m) == text);
  CHECK(mtt::parse_square_matrix(mtt::format_matrix(m)) == m);

  const MatrixQ q = mtt::parse_square_matrix("1\n-3/7\n");
  CHECK(q(0, 0) == Rational(-3, 7));

  CHECK(mtt::format_matrix_inline(make_matrix({{1, 2}, {3, 4}})) ==
        "[[1, 2], [3, 4]]");
}

TEST_CASE("matrix parse rejects malformed input") {
  CHECK_THROWS_AS(mtt::parse_square_matrix(""), std::invalid_argument);
  CHECK_THROWS_AS(mtt::parse_square_matrix("0\n"), std::invalid_argument);
  CHECK_THROWS_AS(mtt::parse_square_matrix("2\n1 2\n3\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(mtt::parse_square_matrix("2\n1 2\n3 x\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(mtt::parse_square_matrix("2\n1 2\n3 4\n5\n"),
                  std::invalid_argument);
}
