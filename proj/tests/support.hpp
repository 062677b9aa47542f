#pragma once

#include <algorithm>
#include <random>

#include "gaidx/graph.hpp"
#include "oracles/reference.hpp"

namespace gaidx::test {

// Triangle 0-1-2 with a pendant at 2.
inline Graph paw() { return Graph::build(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}}); }

// Triangle 0-1-2 with the path 2-3-4 hanging off 2.
inline Graph triangle_with_path() {
  return Graph::build(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}});
}

// Triangle with pendants 3,4 at 0, 5 at 1 and 6 at 2. Vertex 1 is a local
// minimum, vertex 0 the star centre.
inline Graph relocate_witness() {
  return Graph::build(7, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}, {1, 5}, {2, 6}});
}

inline oracle::SimpleGraph to_simple(const Graph& g) {
  oracle::SimpleGraph s{g.order(), {}};
  for (const Edge& e : g.edges()) s.edges.emplace_back(e.u, e.v);
  return s;
}

inline Graph from_simple(const oracle::SimpleGraph& s) {
  std::vector<Edge> edges;
  for (auto [a, b] : s.edges) edges.push_back({a, b});
  return Graph::build(s.n, edges);
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937& rng) {
  std::vector<Vertex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace gaidx::test
