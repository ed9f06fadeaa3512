#include "mtt/matrix.hpp"

#include <sstream>

namespace mtt {
namespace {

Rational row_sum(const MatrixQ& m, Index r) {
  Rational s(0);
  for (Index c = 0; c < m.cols(); ++c) s += m(r, c);
  return s;
}

Rational column_sum(const MatrixQ& m, Index c) {
  Rational s(0);
  for (Index r = 0; r < m.rows(); ++r) s += m(r, c);
  return s;
}

Rational common_cofactor_impl(const MatrixQ& m, CofactorCheck check) {
  const Index n = m.rows();
  const Rational c11 = cofactor(m, 1, 1);
  if (check == CofactorCheck::kAll) {
    for (Index i = 1; i <= n; ++i) {
      for (Index j = 1; j <= n; ++j) {
        const Rational cij = cofactor(m, i, j);
        if (cij != c11) {
          throw InvariantViolation(
              "cofactors disagree: C(1,1) = " + c11.to_string() + " but C(" +
              std::to_string(i) + "," + std::to_string(j) + ") = " +
              cij.to_string());
        }
      }
    }
  }
  return c11;
}

}  // namespace

Rational determinant(MatrixQ m) {
  const Index n = detail::checked_square_dim(m, "determinant");
  if (n == 0) return Rational(1);
  Rational prev_pivot(1);
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    Index pivot_row = -1;
    for (Index r = k; r < n; ++r) {
      if (!m(r, k).is_zero()) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row < 0) return Rational(0);
    if (pivot_row != k) {
      m.row(pivot_row).swap(m.row(k));
      sign = -sign;
    }
    // Bareiss step: the division by the previous pivot is exact.
    for (Index i = k + 1; i < n; ++i) {
      for (Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev_pivot;
      }
      m(i, k) = Rational(0);
    }
    prev_pivot = m(k, k);
  }
  return sign < 0 ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

Rational cofactor(const MatrixQ& m, Index i, Index j) {
  const Index n = detail::checked_square_dim(m, "cofactor");
  detail::check_matrix_index(n, i, j, "cofactor");
  const Rational d = determinant(minor_matrix(m, i, j));
  return (i + j) % 2 == 0 ? d : -d;
}

bool is_symmetric(const MatrixQ& m) {
  if (m.rows() != m.cols()) return false;
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = r + 1; c < m.cols(); ++c) {
      if (m(r, c) != m(c, r)) return false;
    }
  }
  return true;
}

bool has_zero_row_sums(const MatrixQ& m) {
  for (Index r = 0; r < m.rows(); ++r) {
    if (!row_sum(m, r).is_zero()) return false;
  }
  return true;
}

bool has_zero_column_sums(const MatrixQ& m) {
  for (Index c = 0; c < m.cols(); ++c) {
    if (!column_sum(m, c).is_zero()) return false;
  }
  return true;
}

LaplaceLikeMatrix::LaplaceLikeMatrix(MatrixQ m) : m_(std::move(m)) {
  const Index n = detail::checked_square_dim(m_, "LaplaceLikeMatrix");
  if (n < 1) {
    throw std::invalid_argument("LaplaceLikeMatrix: dimension must be >= 1");
  }
  if (!is_symmetric(m_)) {
    throw InvariantViolation("LaplaceLikeMatrix: matrix is not symmetric");
  }
  for (Index r = 0; r < n; ++r) {
    if (!row_sum(m_, r).is_zero()) {
      throw InvariantViolation("LaplaceLikeMatrix: row " +
                               std::to_string(r + 1) +
                               " does not sum to zero");
    }
  }
}

LaplaceLikeMatrix LaplaceLikeMatrix::from_upper_triangle(
    Index n, const std::vector<Rational>& upper) {
  if (n < 1) {
    throw std::invalid_argument("from_upper_triangle: dimension must be >= 1");
  }
  const std::size_t expected = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (upper.size() != expected) {
    throw std::invalid_argument(
        "from_upper_triangle: expected " + std::to_string(expected) +
        " entries, got " + std::to_string(upper.size()));
  }
  MatrixQ m(n, n);
  m.setZero();
  std::size_t pos = 0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      m(i, j) = upper[pos];
      m(j, i) = upper[pos];
      ++pos;
    }
  }
  for (Index i = 0; i < n; ++i) {
    Rational diag(0);
    for (Index j = 0; j < n; ++j) {
      if (j != i) diag -= m(i, j);
    }
    m(i, i) = diag;
  }
  return LaplaceLikeMatrix(std::move(m), Validated{});
}

DoublyBalancedMatrix::DoublyBalancedMatrix(MatrixQ m) : m_(std::move(m)) {
  const Index n = detail::checked_square_dim(m_, "DoublyBalancedMatrix");
  if (n < 1) {
    throw std::invalid_argument(
        "DoublyBalancedMatrix: dimension must be >= 1");
  }
  if (!has_zero_row_sums(m_)) {
    throw InvariantViolation(
        "DoublyBalancedMatrix: rows do not all sum to zero");
  }
  if (!has_zero_column_sums(m_)) {
    throw InvariantViolation(
        "DoublyBalancedMatrix: columns do not all sum to zero");
  }
}

Rational common_cofactor(const LaplaceLikeMatrix& L, CofactorCheck check) {
  return common_cofactor_impl(L.matrix(), check);
}

Rational common_cofactor(const DoublyBalancedMatrix& L, CofactorCheck check) {
  return common_cofactor_impl(L.matrix(), check);
}

MatrixQ parse_square_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  if (!(in >> n) || n < 1 || n > 512) {
    throw std::invalid_argument(
        "matrix file: first token must be a dimension in [1, 512]");
  }
  MatrixQ m(n, n);
  std::string token;
  for (Index r = 0; r < n; ++r) {
    for (Index c = 0; c < n; ++c) {
      if (!(in >> token)) {
        throw std::invalid_argument("matrix file: expected " +
                                    std::to_string(n * n) +
                                    " entries, input ended early");
      }
      m(r, c) = Rational::parse(token);
    }
  }
  if (in >> token) {
    throw std::invalid_argument("matrix file: trailing content '" + token +
                                "'");
  }
  return m;
}

std::string format_matrix(const MatrixQ& m) {
  std::ostringstream out;
  out << m.rows() << '\n';
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ' ';
      out << m(r, c);
    }
    out << '\n';
  }
  return out.str();
}

std::string format_matrix_inline(const MatrixQ& m) {
  std::ostringstream out;
  out << '[';
  for (Index r = 0; r < m.rows(); ++r) {
    if (r > 0) out << ", ";
    out << '[';
    for (Index c = 0; c < m.cols(); ++c) {
      if (c > 0) out << ", ";
      out << m(r, c);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

}  // namespace mtt
