#pragma once

// Slow reference implementations, kept independent of the library's
// own algorithms so the tests have a second opinion to compare with.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "mtt/graph.hpp"
#include "mtt/matrix.hpp"
#include "mtt/trees.hpp"

namespace oracle {

inline mtt::MatrixQ drop_row_col(const mtt::MatrixQ& m, mtt::Index r,
                                 mtt::Index c) {
  const mtt::Index n = m.rows();
  mtt::MatrixQ out(n - 1, n - 1);
  for (mtt::Index a = 0, i = 0; a < n; ++a) {
    if (a == r) continue;
    for (mtt::Index b = 0, j = 0; b < n; ++b) {
      if (b == c) continue;
      out(i, j) = m(a, b);
      ++j;
    }
    ++i;
  }
  return out;
}

// First-row cofactor expansion; usable up to ~6x6.
inline mtt::Rational naive_determinant(const mtt::MatrixQ& m) {
  const mtt::Index n = m.rows();
  if (n == 0) return mtt::Rational(1);
  if (n == 1) return m(0, 0);
  mtt::Rational det;
  for (mtt::Index c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    const mtt::Rational sub = naive_determinant(drop_row_col(m, 0, c));
    det += (c % 2 == 0) ? m(0, c) * sub : -(m(0, c) * sub);
  }
  return det;
}

// Independent re-derivation of tree contraction: drop {i,j}, reattach
// j's neighbours to i, shift labels above j down, normalize.
inline std::vector<mtt::LabeledTree::Edge> contract_edges(
    const mtt::LabeledTree& t, mtt::Index i, mtt::Index j) {
  std::vector<mtt::LabeledTree::Edge> out;
  for (auto [u, v] : t.edges()) {
    if (u == i && v == j) continue;
    if (u == j) u = i;
    if (v == j) v = i;
    if (u > j) --u;
    if (v > j) --v;
    out.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Fiber by filtering the full enumeration.
inline std::vector<mtt::LabeledTree> fiber_by_filter(
    const mtt::LabeledTree& t_prime, mtt::Index i, mtt::Index j,
    mtt::Index n) {
  std::vector<mtt::LabeledTree> out;
  mtt::for_each_tree(n, n, [&](const mtt::LabeledTree& t) {
    if (t.has_edge(i, j) && contract_edges(t, i, j) == t_prime.edges()) {
      out.push_back(t);
    }
  });
  return out;
}

// Spanning-tree count by subgraph containment over the enumeration.
inline std::uint64_t spanning_trees_by_filter(const mtt::WeightedGraph& g) {
  std::uint64_t count = 0;
  mtt::for_each_tree(g.vertex_count(), g.vertex_count(),
                     [&](const mtt::LabeledTree& t) {
                       const auto& edges = t.edges();
                       const bool contained = std::all_of(
                           edges.begin(), edges.end(), [&](const auto& e) {
                             return g.has_edge(e.first, e.second);
                           });
                       if (contained) ++count;
                     });
  return count;
}

}  // namespace oracle
