#include <doctest.h>

#include "mtt/errors.hpp"
#include "mtt/symbolic.hpp"

using mtt::Index;
using mtt::Polynomial;

TEST_CASE("generic laplacian structure") {
  const mtt::MatrixP m = mtt::generic_laplacian(3);
  CHECK(m(0, 1) == Polynomial::variable(mtt::edge_var(1, 2)));
  CHECK(m(1, 0) == m(0, 1));
  CHECK(m(0, 0) ==
        -(Polynomial::variable(mtt::edge_var(1, 2)) +
          Polynomial::variable(mtt::edge_var(1, 3))));
  for (Index i = 0; i < 3; ++i) {
    Polynomial row_sum;
    for (Index j = 0; j < 3; ++j) row_sum += m(i, j);
    CHECK(row_sum.is_zero());
  }
}

TEST_CASE("symbolic cofactor small cases") {
  CHECK(mtt::symbolic_cofactor(1) == Polynomial(1));
  CHECK(mtt::symbolic_cofactor(2) ==
        -Polynomial::variable(mtt::edge_var(1, 2)));
}

TEST_CASE("symbolic tree sum n=3 golden rendering") {
  CHECK(mtt::symbolic_tree_sum(3).to_string() ==
        "1*x_1_2*x_1_3 + 1*x_1_2*x_2_3 + 1*x_1_3*x_2_3");
  CHECK(mtt::symbolic_tree_sum(1) == Polynomial(1));
  CHECK(mtt::symbolic_tree_sum(2) ==
        Polynomial::variable(mtt::edge_var(1, 2)));
}

TEST_CASE("symbolic identity holds for n <= 5") {
  for (Index n = 1; n <= 5; ++n) {
    const auto rep = mtt::verify_symbolic_identity(n);
    CHECK(rep.equal);
    CHECK(rep.witness.empty());
    CHECK(rep.cofactor_terms == mtt::labeled_tree_count(n));
    CHECK(rep.tree_sum_terms == mtt::labeled_tree_count(n));
  }
}

TEST_CASE("symbolic tree sum terms are squarefree with unit coefficients") {
  const Polynomial t = mtt::symbolic_tree_sum(4);
  for (const auto& [m, c] : t.terms()) {
    CHECK(m.is_squarefree());
    CHECK(m.total_degree() == 3);
    CHECK(c == mtt::Rational(1));
  }
}

TEST_CASE("symbolic cap is enforced and can be raised") {
  CHECK_THROWS_AS(mtt::symbolic_cofactor(8), mtt::ResourceLimitError);
  CHECK_THROWS_AS(mtt::symbolic_tree_sum(8), mtt::ResourceLimitError);
  CHECK(mtt::symbolic_tree_sum(8, 8).term_count() ==
        mtt::labeled_tree_count(8));
}
