#include "mtt/symbolic.hpp"

#include <chrono>

namespace mtt {
namespace {

void check_symbolic_cap(Index n, Index cap) {
  if (n < 1) {
    throw std::invalid_argument("symbolic identity: n must be >= 1");
  }
  if (n > cap) {
    throw ResourceLimitError(
        "symbolic identity: n = " + std::to_string(n) +
        " exceeds the cap " + std::to_string(cap) +
        " (raise the cap explicitly; term count grows as n^{n-2})");
  }
}

}  // namespace

MatrixP generic_laplacian(Index n) {
  if (n < 1) {
    throw std::invalid_argument("generic_laplacian: n must be >= 1");
  }
  MatrixP m(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const Polynomial x = Polynomial::variable(edge_var(i + 1, j + 1));
      m(i, j) = x;
      m(j, i) = x;
    }
  }
  for (Index i = 0; i < n; ++i) {
    Polynomial diag;
    for (Index j = 0; j < n; ++j) {
      if (j != i) diag -= m(i, j);
    }
    m(i, i) = std::move(diag);
  }
  return m;
}

Polynomial symbolic_cofactor(Index n, Index cap) {
  check_symbolic_cap(n, cap);
  return det_by_minor_expansion(
      MatrixP(minor_matrix(generic_laplacian(n), 1, 1)));
}

Polynomial symbolic_tree_sum(Index n, Index cap) {
  check_symbolic_cap(n, cap);
  const MatrixP L = generic_laplacian(n);
  Polynomial acc;
  for_each_tree(n, /*cap=*/n, [&](const LabeledTree& t) {
    acc += amplitude(t, L);
  });
  return acc;
}

SymbolicIdentityReport verify_symbolic_identity(Index n, Index cap) {
  const auto start = std::chrono::steady_clock::now();
  SymbolicIdentityReport report;
  report.n = n;
  const Polynomial lhs = symbolic_cofactor(n, cap);
  Polynomial rhs = symbolic_tree_sum(n, cap);
  if (n % 2 == 0) rhs = -rhs;  // (-1)^{n+1}
  report.cofactor_terms = lhs.term_count();
  report.tree_sum_terms = rhs.term_count();
  report.equal = (lhs == rhs);
  if (!report.equal) {
    const auto diff = Polynomial::first_difference(lhs, rhs);
    if (diff) {
      report.witness = "monomial " + diff->monomial.to_string() +
                       ": cofactor coefficient " + diff->lhs.to_string() +
                       " vs tree-sum side " + diff->rhs.to_string();
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace mtt
