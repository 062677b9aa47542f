#pragma once

#include <set>
#include <vector>

#include "gaidx/graph.hpp"
#include "gaidx/trace.hpp"
#include "gaidx/unicyclic.hpp"

namespace gaidx::detail {

/// Mutable edge set used to assemble the next graph of a rewrite.
class EdgeSet {
 public:
  explicit EdgeSet(const Graph& g) : n_(g.order()), edges_(g.edges().begin(), g.edges().end()) {}

  void remove(Edge e) { edges_.erase(e.normalized()); }
  void add(Edge e) { edges_.insert(e.normalized()); }
  Graph build() const {
    std::vector<Edge> list(edges_.begin(), edges_.end());
    return Graph::build(n_, list);
  }

 private:
  int n_;
  std::set<Edge> edges_;
};

// Unchecked rewrites. Callers establish the hypotheses.
Graph rewrite_star(const Graph& g, const CycleStructure& cycle, Vertex v);
Graph rewrite_relocate(const Graph& g, const CycleStructure& cycle, Vertex u, Vertex v);
Graph rewrite_arc(const Graph& g, const CycleStructure& cycle, Vertex u, Edge e, Vertex v);

/// Interior vertices of the (u,v)-arc containing e, ordered from u's side.
/// Empty optional when e is not on either arc.
std::optional<std::vector<Vertex>> arc_interior(const CycleStructure& cycle, Vertex u, Edge e,
                                                Vertex v);

TransformStep make_step(std::string op, std::vector<StepParam> params, const Graph& before,
                        Graph after);

}  // namespace gaidx::detail
