#pragma once

#include <cstdint>
#include <random>

#include "mtt/graph.hpp"
#include "mtt/matrix.hpp"

namespace mtt {

// Seeded random source. std::mt19937_64 output is pinned by the
// standard, and the [lo, hi] draw below uses rejection sampling rather
// than std::uniform_int_distribution, so the same seed yields the same
// stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long long uniform(long long lo, long long hi);
  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Rational with numerator in [-num_abs_max, num_abs_max] and
// denominator in [1, den_max], reduced.
Rational random_rational(Rng& rng, long long num_abs_max = 9,
                         long long den_max = 9);

// Random symmetric zero-row-sum matrix: independent off-diagonal
// entries, diagonal forced by the row sums.
LaplaceLikeMatrix random_laplace_like(Rng& rng, Index n);

// Random zero-row-sum, zero-column-sum matrix: a free (n-1)x(n-1)
// block, last row and column forced by the balance conditions. With
// require_nonsymmetric the result is guaranteed asymmetric; that needs
// n >= 3 (for n = 2 both balance conditions force symmetry).
DoublyBalancedMatrix random_doubly_balanced(Rng& rng, Index n,
                                            bool require_nonsymmetric);

// Connected unit-weight graph: a uniformly random labeled tree plus an
// independent coin per remaining vertex pair.
WeightedGraph random_connected_graph(Rng& rng, Index n);

}  // namespace mtt
