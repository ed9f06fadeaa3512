#pragma once

#include <cstddef>
#include <string>

#include "mtt/polynomial.hpp"
#include "mtt/trees.hpp"

namespace mtt {

// Symbolic expansion is refused above this dimension unless the caller
// raises the cap; memory grows with n^{n-2} terms.
inline constexpr Index kDefaultSymbolicCap = 7;

using MatrixP = DenseSquare<Polynomial>;

// The n x n generic matrix with x_ij (= x_ji) off the diagonal and
// -sum_k x_ik on it: symmetric with identically-zero row sums.
MatrixP generic_laplacian(Index n);

// Expanded determinant of the (1,1) minor of the generic matrix.
Polynomial symbolic_cofactor(Index n, Index cap = kDefaultSymbolicCap);

// Sum over all labeled trees of the squarefree edge monomial; every
// coefficient is 1 and the term count is n^{n-2}.
Polynomial symbolic_tree_sum(Index n, Index cap = kDefaultSymbolicCap);

struct SymbolicIdentityReport {
  Index n = 0;
  bool equal = false;
  std::size_t cofactor_terms = 0;
  std::size_t tree_sum_terms = 0;
  std::string witness;  // first differing monomial, empty when equal
  double elapsed_seconds = 0.0;

  friend bool operator==(const SymbolicIdentityReport& a,
                         const SymbolicIdentityReport& b) {
    return a.n == b.n && a.equal == b.equal &&
           a.cofactor_terms == b.cofactor_terms &&
           a.tree_sum_terms == b.tree_sum_terms && a.witness == b.witness;
  }
};

// Checks symbolic_cofactor(n) == (-1)^{n+1} * symbolic_tree_sum(n) as
// canonical polynomials.
SymbolicIdentityReport verify_symbolic_identity(
    Index n, Index cap = kDefaultSymbolicCap);

}  // namespace mtt
