#pragma once

#include <Eigen/Core>

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mtt/errors.hpp"
#include "mtt/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<mtt::Rational> : GenericNumTraits<mtt::Rational> {
  using Real = mtt::Rational;
  using NonInteger = mtt::Rational;
  using Nested = mtt::Rational;
  using Literal = mtt::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60,
  };
  static inline mtt::Rational epsilon() { return mtt::Rational(0); }
  static inline mtt::Rational dummy_precision() { return mtt::Rational(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace mtt {

using Index = Eigen::Index;

template <typename Scalar>
using DenseSquare = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// Dense matrix over the exact rationals.
using MatrixQ = DenseSquare<Rational>;

namespace detail {

template <typename Scalar>
Index checked_square_dim(const DenseSquare<Scalar>& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  }
  return m.rows();
}

inline void check_matrix_index(Index n, Index i, Index j, const char* who) {
  if (i < 1 || i > n || j < 1 || j > n) {
    throw std::out_of_range(std::string(who) + ": index (" +
                            std::to_string(i) + "," + std::to_string(j) +
                            ") out of range for dimension " +
                            std::to_string(n));
  }
}

}  // namespace detail

// Submatrix obtained by deleting the i'th row and the j'th column
// (1-based). The minor of a 1x1 matrix is the 0x0 matrix.
template <typename Scalar>
DenseSquare<Scalar> minor_matrix(const DenseSquare<Scalar>& m, Index i,
                                 Index j) {
  const Index n = detail::checked_square_dim(m, "minor_matrix");
  detail::check_matrix_index(n, i, j, "minor_matrix");
  DenseSquare<Scalar> out(n - 1, n - 1);
  for (Index r = 0, rr = 0; r < n; ++r) {
    if (r == i - 1) continue;
    for (Index c = 0, cc = 0; c < n; ++c) {
      if (c == j - 1) continue;
      out(rr, cc) = m(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

// Exact determinant via fraction-free Bareiss elimination, O(n^3).
// The determinant of the 0x0 matrix is 1 (empty product).
Rational determinant(MatrixQ m);

// Determinant by Laplace expansion memoized on column subsets,
// O(2^n * n) subdeterminants. Valid over any commutative-ring scalar;
// this is the expansion route used for polynomial matrices.
template <typename Scalar>
Scalar det_by_minor_expansion(const DenseSquare<Scalar>& m) {
  const Index n = detail::checked_square_dim(m, "det_by_minor_expansion");
  if (n == 0) return Scalar(1);
  if (n > 20) {
    throw ResourceLimitError(
        "det_by_minor_expansion: dimension " + std::to_string(n) +
        " exceeds the 2^n expansion limit (20)");
  }
  std::unordered_map<std::uint32_t, Scalar> memo;
  auto rec = [&](auto&& self, std::uint32_t used) -> const Scalar& {
    const auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    const Index row = std::popcount(used);
    Scalar acc(0);
    int parity = 0;
    for (Index c = 0; c < n; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      if (used & bit) continue;
      Scalar term = m(row, c) * self(self, used | bit);
      if (parity % 2 == 0) {
        acc += term;
      } else {
        acc -= term;
      }
      ++parity;
    }
    return memo.emplace(used, std::move(acc)).first->second;
  };
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  memo.emplace(full, Scalar(1));
  return rec(rec, 0);
}

// (-1)^{i+j} det(minor_matrix(m, i, j)), 1-based.
Rational cofactor(const MatrixQ& m, Index i, Index j);

bool is_symmetric(const MatrixQ& m);
bool has_zero_row_sums(const MatrixQ& m);
bool has_zero_column_sums(const MatrixQ& m);

// Symmetric square matrix whose rows (hence columns) sum to zero.
// Invariants are validated eagerly on construction.
class LaplaceLikeMatrix {
 public:
  explicit LaplaceLikeMatrix(MatrixQ m);

  // Builds the matrix from its strictly-upper-triangle entries, row
  // major: (1,2),(1,3),...,(1,n),(2,3),... The diagonal is the negated
  // off-diagonal row sum.
  static LaplaceLikeMatrix from_upper_triangle(
      Index n, const std::vector<Rational>& upper);

  const MatrixQ& matrix() const { return m_; }
  Index size() const { return m_.rows(); }

 private:
  struct Validated {};
  LaplaceLikeMatrix(MatrixQ m, Validated) : m_(std::move(m)) {}
  MatrixQ m_;
};

// Square matrix with zero row sums and zero column sums; symmetry is
// not required.
class DoublyBalancedMatrix {
 public:
  explicit DoublyBalancedMatrix(MatrixQ m);
  const MatrixQ& matrix() const { return m_; }
  Index size() const { return m_.rows(); }

 private:
  MatrixQ m_;
};

enum class CofactorCheck { kSingle, kAll };

constexpr CofactorCheck default_cofactor_check() {
#ifndef NDEBUG
  return CofactorCheck::kAll;
#else
  return CofactorCheck::kSingle;
#endif
}

// C(L): the common value of all cofactors. With CofactorCheck::kAll all
// n^2 cofactors are computed and compared first; a mismatch raises
// InvariantViolation naming the first differing pair.
Rational common_cofactor(const LaplaceLikeMatrix& L,
                         CofactorCheck check = default_cofactor_check());
Rational common_cofactor(const DoublyBalancedMatrix& L,
                         CofactorCheck check = default_cofactor_check());

// Matrix file format: first line n, then n rows of n whitespace-
// separated rationals.
MatrixQ parse_square_matrix(std::string_view text);
std::string format_matrix(const MatrixQ& m);
// Single-line rendering "[[a, b], [c, d]]", used in report instances.
std::string format_matrix_inline(const MatrixQ& m);

}  // namespace mtt
