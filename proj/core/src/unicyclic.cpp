#include "gaidx/unicyclic.hpp"

#include <algorithm>

#include "gaidx/error.hpp"

namespace gaidx {

bool is_unicyclic(const Graph& g) {
  return g.size() == g.order() && is_connected(g);
}

bool CycleStructure::contains(Vertex v) const { return position(v) >= 0; }

int CycleStructure::position(Vertex v) const {
  auto it = std::find(vertices.begin(), vertices.end(), v);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

Vertex CycleStructure::step_from(Vertex v, int step) const {
  const int pos = position(v);
  if (pos < 0) throw VertexError("vertex " + std::to_string(v) + " is not on the cycle");
  const int len = girth();
  return vertices[((pos + step) % len + len) % len];
}

std::pair<Vertex, Vertex> CycleStructure::cycle_neighbors(Vertex v) const {
  Vertex a = step_from(v, -1);
  Vertex b = step_from(v, +1);
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

bool CycleStructure::adjacent_on_cycle(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b) || a == b) return false;
  return step_from(a, +1) == b || step_from(a, -1) == b;
}

std::vector<Edge> CycleStructure::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < girth(); ++i) {
    out.push_back(Edge{vertices[i], vertices[(i + 1) % girth()]}.normalized());
  }
  return out;
}

CycleStructure find_cycle(const Graph& g) {
  if (!is_unicyclic(g)) {
    throw NotUnicyclicError("graph is not unicyclic (n=" + std::to_string(g.order()) +
                            ", m=" + std::to_string(g.size()) + ")");
  }
  // Peel leaves; what survives is exactly the cycle.
  std::vector<int> deg = g.degrees();
  std::vector<char> removed(g.order(), 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (deg[v] == 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    removed[x] = 1;
    for (Vertex y : g.neighbors(x)) {
      if (!removed[y] && --deg[y] == 1) stack.push_back(y);
    }
  }
  Vertex start = 0;
  while (removed[start]) ++start;

  auto on_cycle_neighbors = [&](Vertex x) {
    std::vector<Vertex> nb;
    for (Vertex y : g.neighbors(x)) {
      if (!removed[y]) nb.push_back(y);
    }
    return nb;  // sorted, exactly two entries
  };

  CycleStructure cycle;
  cycle.vertices.push_back(start);
  Vertex prev = start;
  Vertex cur = on_cycle_neighbors(start).front();
  while (cur != start) {
    cycle.vertices.push_back(cur);
    auto nb = on_cycle_neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return cycle;
}

bool PendantTree::is_star() const {
  return std::all_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.touches(root); });
}

PendantTree pendant_tree(const Graph& g, const CycleStructure& cycle, Vertex v) {
  if (!cycle.contains(v)) {
    throw VertexError("vertex " + std::to_string(v) + " is not a cycle vertex");
  }
  PendantTree tree;
  tree.root = v;
  std::vector<char> seen(g.order(), 0);
  for (Vertex c : cycle.vertices) seen[c] = 1;
  std::vector<Vertex> stack{v};
  tree.vertices.push_back(v);
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (seen[y]) continue;
      seen[y] = 1;
      tree.vertices.push_back(y);
      tree.edges.push_back(Edge{x, y}.normalized());
      stack.push_back(y);
    }
  }
  std::sort(tree.vertices.begin(), tree.vertices.end());
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

PendantTree pendant_tree(const Graph& g, Vertex v) { return pendant_tree(g, find_cycle(g), v); }

CycleVertexClass classify_cycle_vertex(const Graph& g, const CycleStructure& cycle, Vertex v) {
  auto [a, b] = cycle.cycle_neighbors(v);
  const int d = g.degree(v);
  return {d >= std::max(g.degree(a), g.degree(b)), d <= std::min(g.degree(a), g.degree(b))};
}

CycleVertexClass classify_cycle_vertex(const Graph& g, Vertex v) {
  return classify_cycle_vertex(g, find_cycle(g), v);
}

Vertex max_degree_cycle_vertex(const Graph& g, const CycleStructure& cycle) {
  Vertex best = -1;
  for (Vertex c : cycle.vertices) {
    if (best < 0 || g.degree(c) > g.degree(best) ||
        (g.degree(c) == g.degree(best) && c < best)) {
      best = c;
    }
  }
  return best;
}

Vertex min_degree_cycle_vertex(const Graph& g, const CycleStructure& cycle) {
  Vertex best = -1;
  for (Vertex c : cycle.vertices) {
    if (best < 0 || g.degree(c) < g.degree(best) ||
        (g.degree(c) == g.degree(best) && c < best)) {
      best = c;
    }
  }
  return best;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || !is_unicyclic(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

}  // namespace gaidx
