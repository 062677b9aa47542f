#include "gaidx/graph.hpp"

#include <algorithm>
#include <queue>

#include "gaidx/error.hpp"

namespace gaidx {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 1) {
    throw GraphError("vertex count must be at least 1, got " + std::to_string(n));
  }
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("vertex id out of range [0, " + std::to_string(n) + ") in pair " +
                           to_string(e),
                       e);
    }
    if (e.u == e.v) {
      throw GraphError("self-loop " + to_string(e), e);
    }
    normalized.push_back(e.normalized());
  }
  std::vector<Edge> sorted = normalized;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    // Report the pair as the caller wrote its second occurrence.
    int seen = 0;
    for (std::size_t i = 0; i < normalized.size(); ++i) {
      if (normalized[i] == *dup && ++seen == 2) {
        throw GraphError("duplicate edge " + to_string(edges[i]), edges[i]);
      }
    }
    throw GraphError("duplicate edge " + to_string(*dup), *dup);
  }
  return Graph(n, std::move(sorted));
}

Graph Graph::cycle(int n) {
  if (n < 3) {
    throw GraphError("a cycle needs at least 3 vertices, got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return build(n, edges);
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adj_(n) {
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const auto& nb = adj_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_);
  for (Vertex v = 0; v < n_; ++v) d[v] = degree(v);
  return d;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph::build(g.order(), edges);
}

bool is_connected(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        frontier.push(y);
      }
    }
  }
  return reached == g.order();
}

}  // namespace gaidx
