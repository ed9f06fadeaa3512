#include "mtt/trees.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <sstream>

namespace mtt {
namespace {

struct UnionFind {
  explicit UnionFind(Index n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), Index{0});
  }
  Index find(Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // returns false when x and y were already connected
  bool unite(Index x, Index y) {
    const Index rx = find(x);
    const Index ry = find(y);
    if (rx == ry) return false;
    parent[rx] = ry;
    return true;
  }
  std::vector<Index> parent;
};

}  // namespace

LabeledTree::LabeledTree(Index n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) {
    throw std::invalid_argument("LabeledTree: vertex count must be >= 1");
  }
  if (static_cast<Index>(edges_.size()) != n_ - 1) {
    throw std::invalid_argument(
        "LabeledTree: expected " + std::to_string(n_ - 1) + " edges, got " +
        std::to_string(edges_.size()));
  }
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u < 1 || v > n_ || u == v) {
      throw std::invalid_argument("LabeledTree: invalid edge " +
                                  std::to_string(u) + "-" + std::to_string(v));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("LabeledTree: duplicate edge");
  }
  // n-1 distinct edges and full connectivity make the tree acyclic.
  UnionFind uf(n_);
  for (const auto& [u, v] : edges_) {
    if (!uf.unite(u - 1, v - 1)) {
      throw std::invalid_argument("LabeledTree: edges contain a cycle");
    }
  }
}

bool LabeledTree::has_edge(Index u, Index v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

Index LabeledTree::degree(Index v) const {
  Index d = 0;
  for (const auto& [a, b] : edges_) {
    if (a == v || b == v) ++d;
  }
  return d;
}

std::vector<Index> LabeledTree::neighbors(Index v) const {
  std::vector<Index> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string LabeledTree::to_string() const {
  if (n_ == 1) return "(single vertex)";
  std::ostringstream out;
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    if (k > 0) out << ' ';
    out << edges_[k].first << '-' << edges_[k].second;
  }
  return out.str();
}

PruferSequence::PruferSequence(Index n, std::vector<Index> seq)
    : n_(n), seq_(std::move(seq)) {
  if (n_ < 1) {
    throw std::invalid_argument("PruferSequence: vertex count must be >= 1");
  }
  const Index expected = n_ >= 2 ? n_ - 2 : 0;
  if (static_cast<Index>(seq_.size()) != expected) {
    throw std::invalid_argument(
        "PruferSequence: expected length " + std::to_string(expected) +
        ", got " + std::to_string(seq_.size()));
  }
  for (const Index s : seq_) {
    if (s < 1 || s > n_) {
      throw std::invalid_argument("PruferSequence: label " +
                                  std::to_string(s) + " out of range");
    }
  }
}

LabeledTree prufer_decode(const PruferSequence& p) {
  const Index n = p.vertex_count();
  if (n == 1) return LabeledTree(1, {});
  std::vector<Index> degree(static_cast<std::size_t>(n) + 1, 1);
  for (const Index s : p.sequence()) ++degree[s];
  std::priority_queue<Index, std::vector<Index>, std::greater<>> leaves;
  for (Index v = 1; v <= n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<LabeledTree::Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (const Index s : p.sequence()) {
    const Index leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, s);
    if (--degree[s] == 1) leaves.push(s);
  }
  const Index u = leaves.top();
  leaves.pop();
  const Index v = leaves.top();
  edges.emplace_back(u, v);
  return LabeledTree(n, std::move(edges));
}

PruferSequence prufer_encode(const LabeledTree& t) {
  const Index n = t.vertex_count();
  if (n <= 2) return PruferSequence(n, {});
  std::vector<std::vector<Index>> adj(static_cast<std::size_t>(n) + 1);
  for (const auto& [u, v] : t.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<Index> degree(static_cast<std::size_t>(n) + 1, 0);
  for (Index v = 1; v <= n; ++v) degree[v] = static_cast<Index>(adj[v].size());
  std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
  std::priority_queue<Index, std::vector<Index>, std::greater<>> leaves;
  for (Index v = 1; v <= n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Index> seq;
  seq.reserve(static_cast<std::size_t>(n) - 2);
  for (Index step = 0; step < n - 2; ++step) {
    const Index leaf = leaves.top();
    leaves.pop();
    removed[leaf] = true;
    Index parent = 0;
    for (const Index w : adj[leaf]) {
      if (!removed[w]) {
        parent = w;
        break;
      }
    }
    seq.push_back(parent);
    if (--degree[parent] == 1) leaves.push(parent);
  }
  return PruferSequence(n, std::move(seq));
}

std::uint64_t labeled_tree_count(Index n) {
  if (n < 1) {
    throw std::invalid_argument("labeled_tree_count: n must be >= 1");
  }
  if (n > 17) {
    throw ResourceLimitError(
        "labeled_tree_count: n^{n-2} overflows 64 bits for n > 17");
  }
  if (n <= 2) return 1;
  std::uint64_t count = 1;
  for (Index k = 0; k < n - 2; ++k) count *= static_cast<std::uint64_t>(n);
  return count;
}

LabeledTree tree_by_index(Index n, std::uint64_t k) {
  const std::uint64_t total = labeled_tree_count(n);
  if (k >= total) {
    throw std::out_of_range("tree_by_index: index " + std::to_string(k) +
                            " out of range (" + std::to_string(total) +
                            " trees)");
  }
  const Index len = n >= 2 ? n - 2 : 0;
  std::vector<Index> seq(static_cast<std::size_t>(len));
  for (Index pos = len; pos-- > 0;) {
    seq[pos] = static_cast<Index>(k % static_cast<std::uint64_t>(n)) + 1;
    k /= static_cast<std::uint64_t>(n);
  }
  return prufer_decode(PruferSequence(n, std::move(seq)));
}

void check_enumeration_cap(Index n, Index cap) {
  if (n < 1) {
    throw std::invalid_argument("tree enumeration: n must be >= 1");
  }
  if (n > cap) {
    throw ResourceLimitError(
        "tree enumeration: n = " + std::to_string(n) +
        " exceeds the cap " + std::to_string(cap) +
        " (raise the cap explicitly to enumerate " +
        (n <= 17 ? std::to_string(labeled_tree_count(n)) : "n^{n-2}") +
        " trees)");
  }
}

std::vector<LabeledTree> all_trees(Index n, Index cap) {
  check_enumeration_cap(n, cap);
  std::vector<LabeledTree> out;
  out.reserve(static_cast<std::size_t>(labeled_tree_count(n)));
  for_each_tree(n, cap, [&](LabeledTree t) { out.push_back(std::move(t)); });
  return out;
}

Rational tree_sum(const MatrixQ& L, Index cap) {
  const Index n = detail::checked_square_dim(L, "tree_sum");
  Rational acc(0);
  for_each_tree(n, cap, [&](const LabeledTree& t) { acc += amplitude(t, L); });
  return acc;
}

}  // namespace mtt
