#include "mtt/random_gen.hpp"

#include <limits>
#include <stdexcept>

#include "mtt/trees.hpp"

namespace mtt {

long long Rng::uniform(long long lo, long long hi) {
  if (lo > hi) {
    throw std::invalid_argument("Rng::uniform: empty range");
  }
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) {  // the full 64-bit range
    return static_cast<long long>(engine_());
  }
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t rem = (kMax % span + 1) % span;
  for (;;) {
    const std::uint64_t r = engine_();
    if (rem == 0 || r <= kMax - rem) {
      return static_cast<long long>(static_cast<std::uint64_t>(lo) +
                                    r % span);
    }
  }
}

Rational random_rational(Rng& rng, long long num_abs_max, long long den_max) {
  if (num_abs_max < 0 || den_max < 1) {
    throw std::invalid_argument("random_rational: bad bounds");
  }
  return Rational(rng.uniform(-num_abs_max, num_abs_max),
                  rng.uniform(1, den_max));
}

LaplaceLikeMatrix random_laplace_like(Rng& rng, Index n) {
  std::vector<Rational> upper;
  upper.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Index k = 0; k < n * (n - 1) / 2; ++k) {
    upper.push_back(random_rational(rng));
  }
  return LaplaceLikeMatrix::from_upper_triangle(n, upper);
}

namespace {

// Pads a free (n-1)x(n-1) block so every row and column sums to zero.
MatrixQ balance_pad(const MatrixQ& block) {
  const Index n = block.rows() + 1;
  MatrixQ m(n, n);
  m.setZero();
  Rational total;
  for (Index i = 0; i + 1 < n; ++i) {
    Rational row_sum;
    for (Index j = 0; j + 1 < n; ++j) {
      m(i, j) = block(i, j);
      row_sum += block(i, j);
    }
    m(i, n - 1) = -row_sum;
    total += row_sum;
  }
  for (Index j = 0; j + 1 < n; ++j) {
    Rational col_sum;
    for (Index i = 0; i + 1 < n; ++i) col_sum += block(i, j);
    m(n - 1, j) = -col_sum;
  }
  m(n - 1, n - 1) = total;
  return m;
}

}  // namespace

DoublyBalancedMatrix random_doubly_balanced(Rng& rng, Index n,
                                            bool require_nonsymmetric) {
  if (n < 1) {
    throw std::invalid_argument("random_doubly_balanced: n must be >= 1");
  }
  if (require_nonsymmetric && n < 3) {
    throw std::invalid_argument(
        "random_doubly_balanced: zero row and column sums force symmetry "
        "below n = 3");
  }
  MatrixQ block(n - 1, n - 1);
  for (Index i = 0; i + 1 < n; ++i) {
    for (Index j = 0; j + 1 < n; ++j) {
      block(i, j) = random_rational(rng);
    }
  }
  MatrixQ m = balance_pad(block);
  if (require_nonsymmetric && is_symmetric(m)) {
    block(0, 1) += Rational(1);
    m = balance_pad(block);
  }
  return DoublyBalancedMatrix(std::move(m));
}

WeightedGraph random_connected_graph(Rng& rng, Index n) {
  if (n < 1) {
    throw std::invalid_argument("random_connected_graph: n must be >= 1");
  }
  std::vector<WeightedEdge> edges;
  if (n == 2) {
    edges.push_back(WeightedEdge{1, 2, Rational(1)});
  } else if (n >= 3) {
    std::vector<Index> seq;
    for (Index k = 0; k < n - 2; ++k) {
      seq.push_back(static_cast<Index>(rng.uniform(1, n)));
    }
    const LabeledTree tree = prufer_decode(PruferSequence(n, std::move(seq)));
    for (const auto& [u, v] : tree.edges()) {
      edges.push_back(WeightedEdge{u, v, Rational(1)});
    }
    for (Index u = 1; u <= n; ++u) {
      for (Index v = u + 1; v <= n; ++v) {
        if (!tree.has_edge(u, v) && rng.coin() && rng.coin()) {
          edges.push_back(WeightedEdge{u, v, Rational(1)});
        }
      }
    }
  }
  return WeightedGraph(n, std::move(edges));
}

}  // namespace mtt
