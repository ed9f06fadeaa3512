#include "mtt/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace mtt {
namespace {

std::string trimmed(std::string line) {
  const auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!line.empty() && is_space(line.back())) line.pop_back();
  std::size_t start = 0;
  while (start < line.size() && is_space(line[start])) ++start;
  return line.substr(start);
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
  throw std::invalid_argument("graph file, line " + std::to_string(line_no) +
                              ": " + why);
}

long long parse_vertex(const std::string& token, std::size_t line_no) {
  std::size_t used = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &used);
  } catch (const std::exception&) {
    parse_fail(line_no, "expected a vertex index, got '" + token + "'");
  }
  if (used != token.size()) {
    parse_fail(line_no, "expected a vertex index, got '" + token + "'");
  }
  return value;
}

}  // namespace

WeightedGraph::WeightedGraph(Index n, std::vector<WeightedEdge> edges)
    : n_(n) {
  if (n_ < 1) {
    throw std::invalid_argument("WeightedGraph: vertex count must be >= 1");
  }
  std::map<std::pair<Index, Index>, Rational> merged;
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) {
      throw std::invalid_argument("WeightedGraph: self-loop at vertex " +
                                  std::to_string(e.u));
    }
    if (e.u < 1 || e.v > n_) {
      throw std::invalid_argument("WeightedGraph: edge " +
                                  std::to_string(e.u) + "-" +
                                  std::to_string(e.v) + " out of range");
    }
    merged[{e.u, e.v}] += e.weight;
  }
  for (const auto& [key, w] : merged) {
    if (!w.is_zero()) {
      edges_.push_back(WeightedEdge{key.first, key.second, w});
    }
  }
}

bool WeightedGraph::has_edge(Index u, Index v) const {
  if (u > v) std::swap(u, v);
  return std::any_of(edges_.begin(), edges_.end(), [&](const WeightedEdge& e) {
    return e.u == u && e.v == v;
  });
}

bool WeightedGraph::is_connected() const {
  std::vector<Index> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), Index{0});
  const auto find = [&](Index x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  Index components = n_;
  for (const auto& e : edges_) {
    const Index ru = find(e.u - 1);
    const Index rv = find(e.v - 1);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  return components == 1;
}

WeightedGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  Index n = -1;
  std::vector<WeightedEdge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trimmed(raw);
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    if (n < 0) {
      std::string token;
      fields >> token;
      const long long value = parse_vertex(token, line_no);
      if (value < 1 || value > 512) {
        parse_fail(line_no, "vertex count must be in [1, 512]");
      }
      if (fields >> token) {
        parse_fail(line_no, "unexpected content after the vertex count");
      }
      n = static_cast<Index>(value);
      continue;
    }
    std::string tu, tv, tw, extra;
    fields >> tu >> tv;
    if (tv.empty()) {
      parse_fail(line_no, "expected 'u v [w]'");
    }
    const long long u = parse_vertex(tu, line_no);
    const long long v = parse_vertex(tv, line_no);
    if (u < 1 || u > n || v < 1 || v > n) {
      parse_fail(line_no, "vertex out of range [1, " + std::to_string(n) +
                              "]");
    }
    if (u == v) {
      parse_fail(line_no, "self-loop at vertex " + std::to_string(u));
    }
    Rational w(1);
    if (fields >> tw) {
      try {
        w = Rational::parse(tw);
      } catch (const std::exception& e) {
        parse_fail(line_no, e.what());
      }
      if (fields >> extra) {
        parse_fail(line_no, "unexpected trailing content '" + extra + "'");
      }
    }
    edges.push_back(
        WeightedEdge{static_cast<Index>(u), static_cast<Index>(v), w});
  }
  if (n < 0) {
    throw std::invalid_argument("graph file: missing vertex count line");
  }
  return WeightedGraph(n, std::move(edges));
}

std::string format_graph(const WeightedGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) {
    out << e.u << ' ' << e.v;
    if (e.weight != Rational(1)) out << ' ' << e.weight;
    out << '\n';
  }
  return out.str();
}

LaplaceLikeMatrix laplacian(const WeightedGraph& g) {
  const Index n = g.vertex_count();
  MatrixQ m(n, n);
  m.setZero();
  for (const auto& e : g.edges()) {
    m(e.u - 1, e.v - 1) = e.weight;
    m(e.v - 1, e.u - 1) = e.weight;
    m(e.u - 1, e.u - 1) -= e.weight;
    m(e.v - 1, e.v - 1) -= e.weight;
  }
  return LaplaceLikeMatrix(std::move(m));
}

SpanningTreeCount count_spanning_trees(const WeightedGraph& g) {
  const Rational c = common_cofactor(laplacian(g), CofactorCheck::kSingle);
  return SpanningTreeCount{c, abs(c), !g.is_connected()};
}

}  // namespace mtt
