#pragma once

#include <vector>

#include "gaidx/graph.hpp"

namespace gaidx {

/// Connected with exactly one cycle, i.e. connected and |E| = |V|.
bool is_unicyclic(const Graph& g);

/// The unique cycle of a unicyclic graph. Vertices are in cyclic order,
/// starting at the smallest id and stepping toward its smaller-id cycle
/// neighbour.
struct CycleStructure {
  std::vector<Vertex> vertices;

  int girth() const noexcept { return static_cast<int>(vertices.size()); }
  bool contains(Vertex v) const;
  /// Index of v in `vertices`, or -1.
  int position(Vertex v) const;
  /// Cycle neighbour reached by stepping `step` (+1 or -1) positions.
  Vertex step_from(Vertex v, int step) const;
  /// The two cycle neighbours of v, smaller id first.
  std::pair<Vertex, Vertex> cycle_neighbors(Vertex v) const;
  bool adjacent_on_cycle(Vertex a, Vertex b) const;
  std::vector<Edge> edges() const;
};

/// Throws NotUnicyclicError when g is not unicyclic.
CycleStructure find_cycle(const Graph& g);

/// Maximal subtree hanging off a cycle vertex (the root included).
struct PendantTree {
  Vertex root = 0;
  std::vector<Vertex> vertices;  // sorted, root included
  std::vector<Edge> edges;       // sorted, normalized

  int edge_count() const noexcept { return static_cast<int>(edges.size()); }
  /// True when every tree edge is incident to the root.
  bool is_star() const;
};

/// Throws VertexError when v is not a cycle vertex of g.
PendantTree pendant_tree(const Graph& g, const CycleStructure& cycle, Vertex v);
PendantTree pendant_tree(const Graph& g, Vertex v);

struct CycleVertexClass {
  bool local_max = false;
  bool local_min = false;
};

CycleVertexClass classify_cycle_vertex(const Graph& g, const CycleStructure& cycle, Vertex v);
CycleVertexClass classify_cycle_vertex(const Graph& g, Vertex v);

/// Largest (smallest) cycle degree; ties go to the smallest id.
Vertex max_degree_cycle_vertex(const Graph& g, const CycleStructure& cycle);
Vertex min_degree_cycle_vertex(const Graph& g, const CycleStructure& cycle);

/// All vertices are of degree 2 and the graph is one cycle.
bool is_cycle_graph(const Graph& g);

}  // namespace gaidx
