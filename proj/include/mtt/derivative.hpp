#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mtt/matrix.hpp"
#include "mtt/trees.hpp"

namespace mtt {

// Tangent direction to the space of Laplace-like matrices: +1 at (i,j)
// and (j,i), -1 at (i,i) and (j,j), zero elsewhere. The direction
// matrix is itself Laplace-like, so L + tV stays Laplace-like.
struct TangentDirection {
  TangentDirection(Index n, Index i, Index j);
  MatrixQ matrix() const;

  Index n;
  Index i;
  Index j;
};

// Adds row j into row i and column j into column i, then deletes row
// and column j (labels above j shift down by one). Takes any square
// matrix; Laplace-like and doubly balanced inputs yield outputs of the
// same kind.
template <typename Scalar>
DenseSquare<Scalar> contract_matrix(const DenseSquare<Scalar>& m, Index i,
                                    Index j) {
  const Index n = detail::checked_square_dim(m, "contract_matrix");
  detail::check_matrix_index(n, i, j, "contract_matrix");
  if (i >= j) {
    throw std::invalid_argument("contract_matrix: require i < j, got (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
  }
  DenseSquare<Scalar> plus = m;
  plus.row(i - 1) += plus.row(j - 1);
  plus.col(i - 1) += plus.col(j - 1);
  return minor_matrix(plus, j, j);
}

// Edge contraction: erase vertex j and the {i,j} edge, reconnect the
// other neighbours of j to i, and relabel j+1..n down to j..n-1. The
// {i,j} edge must be present.
LabeledTree contract_tree(const LabeledTree& t, Index i, Index j);

// Raw edge list of the contraction, normalized (u < v, sorted).
// relabel=false skips the label shift; the verification suite uses it
// for fault injection.
std::vector<LabeledTree::Edge> contract_tree_edges(const LabeledTree& t,
                                                   Index i, Index j,
                                                   bool relabel);

// All trees on {1,...,n} containing {i,j} whose (i,j) contraction is
// t_prime, built directly: each neighbour of i in t_prime attaches to
// either i or j. Fiber size is 2^deg(i).
std::vector<LabeledTree> contraction_fiber(const LabeledTree& t_prime,
                                           Index i, Index j, Index n);

// Coefficients (ascending) of the unique polynomial of degree <= d
// through the points (k, values[k]), k = 0..d. Exact.
std::vector<Rational> interpolate_at_integer_nodes(
    const std::vector<Rational>& values);

// d/dt f(L + tV) at t = 0, computed by sampling f at t = 0..degree_bound
// and interpolating. f restricted to the line must be polynomial in t
// of degree <= degree_bound (degree_bound = n is safe for cofactors and
// tree sums).
template <typename F>
Rational directional_derivative(F&& f, const MatrixQ& L, const MatrixQ& V,
                                Index degree_bound) {
  if (degree_bound < 0) {
    throw std::invalid_argument(
        "directional_derivative: degree bound must be >= 0");
  }
  std::vector<Rational> values;
  values.reserve(static_cast<std::size_t>(degree_bound) + 1);
  for (Index k = 0; k <= degree_bound; ++k) {
    values.push_back(f(MatrixQ(L + Rational(k) * V)));
  }
  const auto coeffs = interpolate_at_integer_nodes(values);
  return coeffs.size() > 1 ? coeffs[1] : Rational(0);
}

// One checked identity instance: both sides computed independently.
struct IdentityReport {
  std::string identity;
  std::string instance;
  Rational left;
  Rational right;
  bool equal = false;

  friend bool operator==(const IdentityReport&,
                         const IdentityReport&) = default;
};

// v_ij(T(L)) = T(L'): left side by exact directional derivative of the
// tree sum, right side by the tree sum of the contracted matrix.
IdentityReport verify_tree_sum_identity(const LaplaceLikeMatrix& L, Index i,
                                        Index j,
                                        std::span<const LabeledTree> trees_n,
                                        std::span<const LabeledTree> trees_c);
IdentityReport verify_tree_sum_identity(const LaplaceLikeMatrix& L, Index i,
                                        Index j,
                                        Index cap = kDefaultEnumerationCap);

// -v_ij(C(L)) = C(L'), for Laplace-like or doubly balanced L.
IdentityReport verify_cofactor_identity(const LaplaceLikeMatrix& L, Index i,
                                        Index j);
IdentityReport verify_cofactor_identity(const DoublyBalancedMatrix& L,
                                        Index i, Index j);

// Fiber sum: sum over the contraction fiber of d A_tau / d L_ij equals
// A_{t_prime}(L').
IdentityReport check_fiber_sum(const LabeledTree& t_prime,
                               const LaplaceLikeMatrix& L, Index i, Index j);

}  // namespace mtt
