#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mtt/matrix.hpp"

namespace mtt {

struct WeightedEdge {
  Index u;
  Index v;
  Rational weight;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Simple undirected graph with rational edge weights. Self-loops are
// rejected; parallel edges are merged by summing weights, and edges
// whose merged weight is zero are dropped (a zero entry in the
// adjacency matrix is no edge).
class WeightedGraph {
 public:
  WeightedGraph(Index n, std::vector<WeightedEdge> edges);

  Index vertex_count() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  bool has_edge(Index u, Index v) const;
  bool is_connected() const;

  friend bool operator==(const WeightedGraph&,
                         const WeightedGraph&) = default;

 private:
  Index n_;
  std::vector<WeightedEdge> edges_;  // u < v, sorted, unique
};

// Edge-list format: first non-comment line is n; each following line
// "u v [w]" with 1-based vertices and an optional rational weight
// (default 1). '#' starts a comment line.
WeightedGraph parse_graph(std::string_view text);
std::string format_graph(const WeightedGraph& g);

// L = A - D: the edge weight at (u,v) off the diagonal, minus the
// weighted valency on it.
LaplaceLikeMatrix laplacian(const WeightedGraph& g);

struct SpanningTreeCount {
  Rational cofactor;    // C(L)
  Rational tree_count;  // |C(L)|
  bool disconnected = false;
};

SpanningTreeCount count_spanning_trees(const WeightedGraph& g);

}  // namespace mtt
