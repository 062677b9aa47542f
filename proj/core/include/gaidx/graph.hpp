#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gaidx {

using Vertex = int;

/// Undirected edge. Inside a Graph the endpoints are stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge normalized() const noexcept { return u <= v ? *this : Edge{v, u}; }
  constexpr bool touches(Vertex x) const noexcept { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const noexcept { return u == x ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph on vertices 0..n-1. Immutable once built; every
/// rewrite in the library produces a fresh Graph so vertex ids stay stable
/// across a transformation sequence.
class Graph {
 public:
  /// Validates and builds. Throws GraphError on an out-of-range id, a
  /// self-loop or a repeated pair (in either orientation).
  static Graph build(int n, std::span<const Edge> edges);
  static Graph build(int n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Cycle graph C_n on 0..n-1 in ring order.
  static Graph cycle(int n);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  int degree(Vertex v) const { return static_cast<int>(adj_.at(v).size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  bool has_edge(Vertex a, Vertex b) const;
  bool contains(Vertex v) const noexcept { return v >= 0 && v < n_; }

  /// Sorted, normalized edge list.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::vector<int> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph(int n, std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Returns the same graph with vertex v renamed to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

bool is_connected(const Graph& g);

}  // namespace gaidx
