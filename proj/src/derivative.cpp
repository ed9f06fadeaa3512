#include "mtt/derivative.hpp"

#include <algorithm>
#include <sstream>

namespace mtt {
namespace {

void check_pair(Index n, Index i, Index j, const char* who) {
  detail::check_matrix_index(n, i, j, who);
  if (i >= j) {
    throw std::invalid_argument(std::string(who) + ": require i < j, got (" +
                                std::to_string(i) + "," + std::to_string(j) +
                                ")");
  }
}

std::string pair_instance(Index n, Index i, Index j, const MatrixQ& m) {
  std::ostringstream out;
  out << "n=" << n << " (i,j)=(" << i << "," << j
      << ") L=" << format_matrix_inline(m);
  return out.str();
}

// amplitude with the {i,j} factor removed: d A_tau / d L_ij for a tree
// containing the edge.
Rational amplitude_without_edge(const LabeledTree& t, const MatrixQ& L,
                                Index i, Index j) {
  Rational prod(1);
  for (const auto& [u, v] : t.edges()) {
    if (u == i && v == j) continue;
    prod *= L(u - 1, v - 1);
  }
  return prod;
}

}  // namespace

TangentDirection::TangentDirection(Index n_, Index i_, Index j_)
    : n(n_), i(i_), j(j_) {
  check_pair(n, i, j, "TangentDirection");
}

MatrixQ TangentDirection::matrix() const {
  MatrixQ v(n, n);
  v.setZero();
  v(i - 1, j - 1) = Rational(1);
  v(j - 1, i - 1) = Rational(1);
  v(i - 1, i - 1) = Rational(-1);
  v(j - 1, j - 1) = Rational(-1);
  return v;
}

std::vector<LabeledTree::Edge> contract_tree_edges(const LabeledTree& t,
                                                   Index i, Index j,
                                                   bool relabel) {
  const Index n = t.vertex_count();
  check_pair(n, i, j, "contract_tree");
  if (!t.has_edge(i, j)) {
    throw std::invalid_argument("contract_tree: edge " + std::to_string(i) +
                                "-" + std::to_string(j) +
                                " is not in the tree");
  }
  std::vector<LabeledTree::Edge> out;
  out.reserve(t.edges().size() - 1);
  for (const auto& [u, v] : t.edges()) {
    if (u == i && v == j) continue;
    Index a = (u == j) ? i : u;
    Index b = (v == j) ? i : v;
    if (relabel) {
      if (a > j) --a;
      if (b > j) --b;
    }
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

LabeledTree contract_tree(const LabeledTree& t, Index i, Index j) {
  return LabeledTree(t.vertex_count() - 1,
                     contract_tree_edges(t, i, j, /*relabel=*/true));
}

std::vector<LabeledTree> contraction_fiber(const LabeledTree& t_prime,
                                           Index i, Index j, Index n) {
  check_pair(n, i, j, "contraction_fiber");
  if (t_prime.vertex_count() != n - 1) {
    throw std::invalid_argument(
        "contraction_fiber: expected a tree on " + std::to_string(n - 1) +
        " vertices, got " + std::to_string(t_prime.vertex_count()));
  }
  // Undo the relabeling: labels >= j in t_prime correspond to one higher
  // in the preimage. lift(i) == i because i < j.
  const auto lift = [j](Index v) { return v >= j ? v + 1 : v; };

  std::vector<LabeledTree::Edge> fixed;
  fixed.emplace_back(i, j);
  std::vector<Index> merged_neighbors;
  for (const auto& [u, v] : t_prime.edges()) {
    if (u == i) {
      merged_neighbors.push_back(v);
    } else if (v == i) {
      merged_neighbors.push_back(u);
    } else {
      fixed.emplace_back(std::min(lift(u), lift(v)),
                         std::max(lift(u), lift(v)));
    }
  }

  const std::size_t d = merged_neighbors.size();
  std::vector<LabeledTree> fiber;
  fiber.reserve(std::size_t{1} << d);
  for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
    std::vector<LabeledTree::Edge> edges = fixed;
    for (std::size_t b = 0; b < d; ++b) {
      const Index w = lift(merged_neighbors[b]);
      const Index anchor = (mask >> b) & 1 ? j : i;
      edges.emplace_back(std::min(anchor, w), std::max(anchor, w));
    }
    fiber.emplace_back(n, std::move(edges));
  }
  return fiber;
}

std::vector<Rational> interpolate_at_integer_nodes(
    const std::vector<Rational>& values) {
  if (values.empty()) {
    throw std::invalid_argument("interpolation requires at least one value");
  }
  const std::size_t d = values.size() - 1;
  // Divided differences over the nodes 0..d (consecutive integers, so
  // the denominator at level L is exactly L).
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level <= d; ++level) {
    for (std::size_t k = d; k >= level; --k) {
      dd[k] = (dd[k] - dd[k - 1]) / Rational(static_cast<long long>(level));
    }
  }
  // Expand the Newton form into monomial coefficients.
  std::vector<Rational> coeffs(d + 1, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // prod_{m<k} (t - m)
  for (std::size_t k = 0; k <= d; ++k) {
    for (std::size_t m = 0; m < basis.size(); ++m) {
      coeffs[m] += dd[k] * basis[m];
    }
    if (k < d) {
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      const Rational node(static_cast<long long>(k));
      for (std::size_t m = 0; m < basis.size(); ++m) {
        next[m + 1] += basis[m];
        next[m] -= node * basis[m];
      }
      basis = std::move(next);
    }
  }
  return coeffs;
}

IdentityReport verify_tree_sum_identity(const LaplaceLikeMatrix& L, Index i,
                                        Index j,
                                        std::span<const LabeledTree> trees_n,
                                        std::span<const LabeledTree> trees_c) {
  const Index n = L.size();
  check_pair(n, i, j, "verify_tree_sum_identity");
  const MatrixQ v = TangentDirection(n, i, j).matrix();
  const Rational left = directional_derivative(
      [&](const MatrixQ& m) { return tree_sum<Rational>(m, trees_n); },
      L.matrix(), v, n);
  const MatrixQ contracted = contract_matrix(L.matrix(), i, j);
  const Rational right = tree_sum<Rational>(contracted, trees_c);
  return IdentityReport{"tree_sum_contraction",
                        pair_instance(n, i, j, L.matrix()), left, right,
                        left == right};
}

IdentityReport verify_tree_sum_identity(const LaplaceLikeMatrix& L, Index i,
                                        Index j, Index cap) {
  const Index n = L.size();
  check_pair(n, i, j, "verify_tree_sum_identity");
  const auto trees_n = all_trees(n, cap);
  const auto trees_c = all_trees(n - 1, cap);
  return verify_tree_sum_identity(L, i, j, trees_n, trees_c);
}

namespace {

// Shared by the Laplace-like and doubly balanced paths. The line
// L + tV preserves the balance invariants, so the cofactor at (1,1) is
// the common cofactor at every sample point.
template <typename Wrapper>
IdentityReport cofactor_identity_impl(const Wrapper& L, Index i, Index j) {
  const Index n = L.size();
  check_pair(n, i, j, "verify_cofactor_identity");
  const MatrixQ v = TangentDirection(n, i, j).matrix();
  const Rational left = -directional_derivative(
      [](const MatrixQ& m) { return cofactor(m, 1, 1); }, L.matrix(), v, n);
  const Wrapper contracted(contract_matrix(L.matrix(), i, j));
  const Rational right = common_cofactor(contracted, CofactorCheck::kSingle);
  return IdentityReport{"cofactor_contraction",
                        pair_instance(n, i, j, L.matrix()), left, right,
                        left == right};
}

}  // namespace

IdentityReport verify_cofactor_identity(const LaplaceLikeMatrix& L, Index i,
                                        Index j) {
  return cofactor_identity_impl(L, i, j);
}

IdentityReport verify_cofactor_identity(const DoublyBalancedMatrix& L,
                                        Index i, Index j) {
  return cofactor_identity_impl(L, i, j);
}

IdentityReport check_fiber_sum(const LabeledTree& t_prime,
                               const LaplaceLikeMatrix& L, Index i, Index j) {
  const Index n = L.size();
  check_pair(n, i, j, "check_fiber_sum");
  Rational left(0);
  for (const LabeledTree& t : contraction_fiber(t_prime, i, j, n)) {
    left += amplitude_without_edge(t, L.matrix(), i, j);
  }
  const MatrixQ contracted = contract_matrix(L.matrix(), i, j);
  const Rational right = amplitude(t_prime, contracted);
  std::ostringstream instance;
  instance << "n=" << n << " (i,j)=(" << i << "," << j << ") t'=["
           << t_prime.to_string() << "] L=" << format_matrix_inline(L.matrix());
  return IdentityReport{"fiber_sum", instance.str(), left, right,
                        left == right};
}

}  // namespace mtt
