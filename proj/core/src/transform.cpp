#include "gaidx/transform.hpp"

#include <algorithm>
#include <atomic>

#include "gaidx/index.hpp"
#include "gaidx/unicyclic.hpp"
#include "transform_detail.hpp"

namespace gaidx {
namespace {

#ifdef NDEBUG
std::atomic<bool> g_checks{false};
#else
std::atomic<bool> g_checks{true};
#endif

std::string vname(Vertex v) { return "vertex " + std::to_string(v); }

// Children of `root` are explored without crossing `blocked`.
std::vector<Vertex> subtree_vertices(const Graph& g, Vertex root, Vertex blocked) {
  std::vector<Vertex> out{root};
  std::vector<Vertex> stack{root};
  std::vector<char> seen(g.order(), 0);
  seen[root] = 1;
  if (blocked >= 0) seen[blocked] = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        out.push_back(y);
        stack.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void verify_monotone(const char* op, const Graph& before, const Graph& after) {
  if (!monotonicity_checks_enabled()) return;
  const double a = ga_index(before);
  const double b = ga_index(after);
  if (b > a + kTolerance) {
    throw MonotonicityViolation(std::string(op) + " increased GA from " + std::to_string(a) +
                                " to " + std::to_string(b));
  }
}

template <class Check>
void require(const char* op, const Check& reason) {
  if (reason) throw PreconditionError(op, *reason);
}

std::optional<std::string> cycle_vertex_reason(const CycleStructure& cycle, Vertex x) {
  if (!cycle.contains(x)) return vname(x) + " is not a cycle vertex";
  return std::nullopt;
}

std::optional<std::string> star_centre_reason(const Graph& g, const CycleStructure& cycle,
                                              Vertex v) {
  if (auto r = cycle_vertex_reason(cycle, v)) return r;
  if (!classify_cycle_vertex(g, cycle, v).local_max) return vname(v) + " is not a local maximum";
  if (!pendant_tree(g, cycle, v).is_star()) return "pendant tree of " + vname(v) + " is not a star";
  return std::nullopt;
}

bool has_maximal_cycle_degree(const Graph& g, const CycleStructure& cycle, Vertex v) {
  return g.degree(v) == g.degree(max_degree_cycle_vertex(g, cycle));
}

}  // namespace

void set_monotonicity_checks(bool enabled) { g_checks.store(enabled); }
bool monotonicity_checks_enabled() { return g_checks.load(); }

namespace detail {

TransformStep make_step(std::string op, std::vector<StepParam> params, const Graph& before,
                        Graph after) {
  const double a = ga_index(before);
  const double b = ga_index(after);
  return TransformStep{std::move(op), std::move(params), a, b, std::move(after)};
}

Graph rewrite_star(const Graph& g, const CycleStructure& cycle, Vertex v) {
  const PendantTree tree = pendant_tree(g, cycle, v);
  EdgeSet next(g);
  for (const Edge& e : tree.edges) next.remove(e);
  for (Vertex y : tree.vertices) {
    if (y != v) next.add({v, y});
  }
  return next.build();
}

Graph rewrite_relocate(const Graph& g, const CycleStructure& cycle, Vertex u, Vertex v) {
  const PendantTree tree = pendant_tree(g, cycle, u);
  EdgeSet next(g);
  for (const Edge& e : tree.edges) next.remove(e);
  for (Vertex y : tree.vertices) {
    if (y != u) next.add({v, y});
  }
  return next.build();
}

std::optional<std::vector<Vertex>> arc_interior(const CycleStructure& cycle, Vertex u, Edge e,
                                                Vertex v) {
  const Edge target = e.normalized();
  for (int step : {+1, -1}) {
    std::vector<Vertex> interior;
    bool found = false;
    Vertex prev = u;
    Vertex cur = cycle.step_from(u, step);
    while (true) {
      if (Edge{prev, cur}.normalized() == target) found = true;
      if (cur == v) break;
      interior.push_back(cur);
      prev = cur;
      cur = cycle.step_from(cur, step);
    }
    if (found) return interior;
  }
  return std::nullopt;
}

Graph rewrite_arc(const Graph& g, const CycleStructure& cycle, Vertex u, Edge e, Vertex v) {
  const std::vector<Vertex> interior = *arc_interior(cycle, u, e, v);
  EdgeSet next(g);
  for (Vertex w : interior) {
    const PendantTree tree = pendant_tree(g, cycle, w);
    for (const Edge& t : tree.edges) next.remove(t);
    for (Vertex y : tree.vertices) {
      if (y != w) next.add({v, y});
    }
  }
  // Arc edges u-x, x-..., ...-v all go; u joins v directly and every
  // interior vertex (x included) becomes a leaf of v.
  Vertex prev = u;
  for (Vertex w : interior) {
    next.remove({prev, w});
    prev = w;
  }
  next.remove({prev, v});
  next.add({u, v});
  for (Vertex w : interior) next.add({v, w});
  return next.build();
}

}  // namespace detail

// ---------------------------------------------------------------------------

std::optional<std::string> check_star_transform(const Graph& g, Vertex v) {
  if (!is_unicyclic(g)) return "graph is not unicyclic";
  const CycleStructure cycle = find_cycle(g);
  if (auto r = cycle_vertex_reason(cycle, v)) return r;
  if (!classify_cycle_vertex(g, cycle, v).local_max) return vname(v) + " is not a local maximum";
  return std::nullopt;
}

Graph star_transform(const Graph& g, Vertex v) {
  const CycleStructure cycle = find_cycle(g);
  require("star_transform", check_star_transform(g, v));
  Graph out = detail::rewrite_star(g, cycle, v);
  verify_monotone("star_transform", g, out);
  return out;
}

std::optional<std::string> check_relocate_min(const Graph& g, Vertex u, Vertex v) {
  if (!is_unicyclic(g)) return "graph is not unicyclic";
  const CycleStructure cycle = find_cycle(g);
  if (auto r = cycle_vertex_reason(cycle, u)) return r;
  if (u == v) return "u and v must differ";
  if (auto r = star_centre_reason(g, cycle, v)) return r;
  if (!classify_cycle_vertex(g, cycle, u).local_min) return vname(u) + " is not a local minimum";
  return std::nullopt;
}

Graph relocate_min(const Graph& g, Vertex u, Vertex v) {
  const CycleStructure cycle = find_cycle(g);
  require("relocate_min", check_relocate_min(g, u, v));
  Graph out = detail::rewrite_relocate(g, cycle, u, v);
  verify_monotone("relocate_min", g, out);
  return out;
}

std::optional<std::string> check_arc_transform(const Graph& g, Vertex u, Edge e, Vertex v) {
  if (!is_unicyclic(g)) return "graph is not unicyclic";
  const CycleStructure cycle = find_cycle(g);
  if (auto r = cycle_vertex_reason(cycle, u)) return r;
  if (auto r = cycle_vertex_reason(cycle, v)) return r;
  if (u == v) return "u and v must differ";
  if (cycle.adjacent_on_cycle(u, v)) return vname(u) + " and " + vname(v) + " are adjacent";
  const auto cycle_edges = cycle.edges();
  if (std::find(cycle_edges.begin(), cycle_edges.end(), e.normalized()) == cycle_edges.end()) {
    return "edge " + to_string(e) + " is not a cycle edge";
  }
  if (auto r = star_centre_reason(g, cycle, v)) return r;
  const auto interior = detail::arc_interior(cycle, u, e, v);
  for (Vertex w : *interior) {
    if (g.degree(w) < g.degree(u) || g.degree(w) > g.degree(v)) {
      return "interior " + vname(w) + " has degree " + std::to_string(g.degree(w)) +
             " outside [d(u), d(v)] = [" + std::to_string(g.degree(u)) + ", " +
             std::to_string(g.degree(v)) + "]";
    }
  }
  return std::nullopt;
}

Graph arc_transform(const Graph& g, Vertex u, Edge e, Vertex v) {
  const CycleStructure cycle = find_cycle(g);
  require("arc_transform", check_arc_transform(g, u, e, v));
  Graph out = detail::rewrite_arc(g, cycle, u, e, v);
  verify_monotone("arc_transform", g, out);
  return out;
}

// ---------------------------------------------------------------------------

std::optional<std::string> check_finish_two_neighbors_deg2(const Graph& g, Vertex v) {
  if (!is_unicyclic(g)) return "graph is not unicyclic";
  const CycleStructure cycle = find_cycle(g);
  if (auto r = cycle_vertex_reason(cycle, v)) return r;
  if (!has_maximal_cycle_degree(g, cycle, v)) return vname(v) + " is not of maximal cycle degree";
  if (!pendant_tree(g, cycle, v).is_star()) return "pendant tree of " + vname(v) + " is not a star";
  auto [a, b] = cycle.cycle_neighbors(v);
  if (g.degree(a) != 2 || g.degree(b) != 2) {
    return "cycle neighbours of " + vname(v) + " do not both have degree 2";
  }
  if (cycle.girth() == 3) return "girth is 3, the graph is already S_{n;3}";
  return std::nullopt;
}

std::vector<TransformStep> finish_two_neighbors_deg2_steps(const Graph& g, Vertex v) {
  if (!is_unicyclic(g)) throw NotUnicyclicError("finish_two_neighbors_deg2: graph is not unicyclic");
  if (auto reason = check_finish_two_neighbors_deg2(g, v)) {
    if (find_cycle(g).girth() == 3 && reason->starts_with("girth")) {
      throw GirthThreeError("finish_two_neighbors_deg2", *reason);
    }
    throw PreconditionError("finish_two_neighbors_deg2", *reason);
  }
  const CycleStructure cycle = find_cycle(g);
  auto [u, ubar] = cycle.cycle_neighbors(v);
  // Remaining cycle vertices v_1..v_t from u's side to ubar's side.
  const int away = cycle.step_from(u, +1) == v ? -1 : +1;
  std::vector<Vertex> rest;
  for (Vertex cur = cycle.step_from(u, away); cur != ubar; cur = cycle.step_from(cur, away)) {
    rest.push_back(cur);
  }
  Vertex top = rest.front();
  for (Vertex c : rest) {
    if (g.degree(c) > g.degree(top) || (g.degree(c) == g.degree(top) && c < top)) top = c;
  }

  std::vector<TransformStep> steps;
  Graph cur = g;
  auto apply = [&](std::string op, std::vector<StepParam> params, Graph next) {
    steps.push_back(detail::make_step(std::move(op), std::move(params), cur, next));
    cur = std::move(next);
  };
  if (rest.size() >= 2) {
    // T_top must be a star before it can absorb arcs.
    apply("star_transform", {{"v", top}}, star_transform(cur, top));
    if (top != rest.front()) {
      apply("arc_transform", {{"u", u}, {"e_u", u}, {"e_v", rest.front()}, {"v", top}},
            arc_transform(cur, u, {u, rest.front()}, top));
    }
    if (top != rest.back()) {
      apply("arc_transform", {{"u", ubar}, {"e_u", ubar}, {"e_v", rest.back()}, {"v", top}},
            arc_transform(cur, ubar, {ubar, rest.back()}, top));
    }
  }
  apply("star_transform", {{"v", top}}, star_transform(cur, top));
  verify_monotone("finish_two_neighbors_deg2", g, cur);
  return steps;
}

Graph finish_two_neighbors_deg2(const Graph& g, Vertex v) {
  return finish_two_neighbors_deg2_steps(g, v).back().result;
}

std::optional<std::string> check_finish_one_neighbor_deg2(const Graph& g, Vertex v, Vertex u) {
  if (!is_unicyclic(g)) return "graph is not unicyclic";
  const CycleStructure cycle = find_cycle(g);
  if (auto r = cycle_vertex_reason(cycle, v)) return r;
  if (auto r = cycle_vertex_reason(cycle, u)) return r;
  if (!has_maximal_cycle_degree(g, cycle, v)) return vname(v) + " is not of maximal cycle degree";
  if (!pendant_tree(g, cycle, v).is_star()) return "pendant tree of " + vname(v) + " is not a star";
  if (!cycle.adjacent_on_cycle(u, v)) return vname(u) + " is not a cycle neighbour of " + vname(v);
  if (g.degree(u) != 2) return vname(u) + " does not have degree 2";
  const Vertex other = cycle.step_from(v, +1) == u ? cycle.step_from(v, -1) : cycle.step_from(v, +1);
  if (g.degree(other) == 2) return "both cycle neighbours of " + vname(v) + " have degree 2";
  for (Vertex c : cycle.vertices) {
    if (c != u && classify_cycle_vertex(g, cycle, c).local_min) {
      return "cycle " + vname(c) + " is a second local minimum";
    }
  }
  return std::nullopt;
}

std::vector<TransformStep> finish_one_neighbor_deg2_steps(const Graph& g, Vertex v, Vertex u) {
  if (!is_unicyclic(g)) throw NotUnicyclicError("finish_one_neighbor_deg2: graph is not unicyclic");
  require("finish_one_neighbor_deg2", check_finish_one_neighbor_deg2(g, v, u));
  CycleStructure cycle = find_cycle(g);
  const int away = cycle.step_from(u, +1) == v ? -1 : +1;
  std::vector<Vertex> rest;  // v_1 (next to u) .. v_t (next to v)
  for (Vertex cur = cycle.step_from(u, away); cur != v; cur = cycle.step_from(cur, away)) {
    rest.push_back(cur);
  }
  const Vertex far = rest.back();

  std::vector<TransformStep> steps;
  Graph cur = g;
  auto apply = [&](std::string op, std::vector<StepParam> params, Graph next) {
    steps.push_back(detail::make_step(std::move(op), std::move(params), cur, next));
    cur = std::move(next);
  };

  if (rest.size() >= 2) {
    // v_t is the heaviest of v_1..v_t but need not be a local maximum of
    // the whole cycle, so the arc rewrite is applied without the arc
    // operator's own hypothesis check.
    apply("arc_transform", {{"u", u}, {"e_u", u}, {"e_v", rest.front()}, {"v", far}},
          detail::rewrite_arc(cur, cycle, u, {u, rest.front()}, far));
    cycle = find_cycle(cur);
  }

  const PendantTree tree = pendant_tree(cur, cycle, far);
  Vertex heavy = -1;
  for (Vertex w : cur.neighbors(far)) {
    if (cycle.contains(w) || cur.degree(w) <= cur.degree(far)) continue;
    if (heavy < 0 || cur.degree(w) > cur.degree(heavy) ||
        (cur.degree(w) == cur.degree(heavy) && w < heavy)) {
      heavy = w;
    }
  }

  detail::EdgeSet next(cur);
  if (heavy < 0) {
    // Everything deeper than the children of v_t moves onto v.
    for (const Edge& e : tree.edges) {
      if (!e.touches(far)) next.remove(e);
    }
    for (Vertex y : tree.vertices) {
      if (y != far && !cur.has_edge(far, y)) next.add({v, y});
    }
    apply("relocate_deep_edges", {{"from", far}, {"to", v}}, next.build());
  } else {
    // u moves from v_t to w, closing a 4-cycle v-u-w-v_t. The rest of T_{v_t}
    // goes to v and T_w becomes a star at w.
    const std::vector<Vertex> under_w = subtree_vertices(cur, heavy, far);
    auto in_w = [&](Vertex y) { return std::binary_search(under_w.begin(), under_w.end(), y); };
    next.remove({far, u});
    next.add({heavy, u});
    for (const Edge& e : tree.edges) {
      if (e == Edge{far, heavy}.normalized()) continue;
      next.remove(e);
    }
    for (Vertex y : tree.vertices) {
      if (y == far || y == heavy) continue;
      next.add(in_w(y) ? Edge{heavy, y} : Edge{v, y});
    }
    apply("split_far_tree", {{"from", far}, {"w", heavy}, {"to", v}}, next.build());
  }
  verify_monotone("finish_one_neighbor_deg2", g, cur);
  return steps;
}

Graph finish_one_neighbor_deg2(const Graph& g, Vertex v, Vertex u) {
  return finish_one_neighbor_deg2_steps(g, v, u).back().result;
}

}  // namespace gaidx
