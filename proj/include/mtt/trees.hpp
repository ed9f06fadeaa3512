#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mtt/matrix.hpp"

namespace mtt {

// Enumeration is refused above this vertex count unless the caller
// raises the cap explicitly (9^7 ~ 4.8M trees is still desk scale).
inline constexpr Index kDefaultEnumerationCap = 9;

// Tree on the labeled vertex set {1,...,n}. Edges are stored as (u,v)
// pairs with u < v, sorted; edge count and connectivity are checked on
// construction.
class LabeledTree {
 public:
  using Edge = std::pair<Index, Index>;

  LabeledTree(Index n, std::vector<Edge> edges);

  Index vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(Index u, Index v) const;
  Index degree(Index v) const;
  std::vector<Index> neighbors(Index v) const;

  // "1-2 1-3"; "(single vertex)" when n = 1.
  std::string to_string() const;

  friend auto operator<=>(const LabeledTree&, const LabeledTree&) = default;

 private:
  Index n_;
  std::vector<Edge> edges_;
};

// Sequence of n-2 labels in [1, n] (empty for n <= 2), in bijection
// with labeled trees on {1,...,n}.
class PruferSequence {
 public:
  PruferSequence(Index n, std::vector<Index> seq);

  Index vertex_count() const { return n_; }
  const std::vector<Index>& sequence() const { return seq_; }

  friend auto operator<=>(const PruferSequence&,
                          const PruferSequence&) = default;

 private:
  Index n_;
  std::vector<Index> seq_;
};

LabeledTree prufer_decode(const PruferSequence& p);
PruferSequence prufer_encode(const LabeledTree& t);

// n^{n-2} for n >= 2, 1 for n = 1. Throws ResourceLimitError when the
// count would overflow 64 bits (n > 17).
std::uint64_t labeled_tree_count(Index n);

// The k-th labeled tree (0-based) in lexicographic Prüfer order: the
// Prüfer sequence is the length-(n-2) base-n representation of k.
LabeledTree tree_by_index(Index n, std::uint64_t k);

void check_enumeration_cap(Index n, Index cap);

// Calls fn with every labeled tree on {1,...,n} exactly once, in
// lexicographic Prüfer order.
template <typename Fn>
void for_each_tree(Index n, Index cap, Fn&& fn) {
  check_enumeration_cap(n, cap);
  const std::uint64_t total = labeled_tree_count(n);
  for (std::uint64_t k = 0; k < total; ++k) {
    fn(tree_by_index(n, k));
  }
}

std::vector<LabeledTree> all_trees(Index n,
                                   Index cap = kDefaultEnumerationCap);

// A_tau(L): the product of L(i,j) over the edges {i,j} of the tree,
// i < j. The empty product (n = 1) is 1.
template <typename Scalar>
Scalar amplitude(const LabeledTree& t, const DenseSquare<Scalar>& L) {
  if (L.rows() != L.cols() || L.rows() != t.vertex_count()) {
    throw std::invalid_argument("amplitude: dimension mismatch");
  }
  Scalar prod(1);
  for (const auto& [u, v] : t.edges()) {
    prod *= L(u - 1, v - 1);
  }
  return prod;
}

// T(L): the sum of amplitudes over the given trees.
template <typename Scalar>
Scalar tree_sum(const DenseSquare<Scalar>& L,
                std::span<const LabeledTree> trees) {
  Scalar acc(0);
  for (const auto& t : trees) {
    acc += amplitude(t, L);
  }
  return acc;
}

// Streaming T(L) over all labeled trees on {1,...,dim(L)}.
Rational tree_sum(const MatrixQ& L, Index cap = kDefaultEnumerationCap);

}  // namespace mtt
