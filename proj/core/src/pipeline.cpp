#include <stdexcept>

#include "gaidx/families.hpp"
#include "gaidx/transform.hpp"
#include "gaidx/unicyclic.hpp"
#include "transform_detail.hpp"

namespace gaidx {
namespace {

Vertex other_cycle_neighbor(const CycleStructure& cycle, Vertex v, Vertex u) {
  const Vertex a = cycle.step_from(v, +1);
  return a == u ? cycle.step_from(v, -1) : a;
}

// Smallest-id local minimum other than `skip` and `centre`.
std::optional<Vertex> second_local_min(const Graph& g, const CycleStructure& cycle, Vertex skip,
                                       Vertex centre) {
  std::optional<Vertex> best;
  for (Vertex c : cycle.vertices) {
    if (c == skip || c == centre) continue;
    if (classify_cycle_vertex(g, cycle, c).local_min && (!best || c < *best)) best = c;
  }
  return best;
}

}  // namespace

std::string to_string(PipelineOutcome outcome) {
  switch (outcome) {
    case PipelineOutcome::reduced: return "reduced";
    case PipelineOutcome::cycle: return "cycle";
    case PipelineOutcome::small_order: return "small_order";
  }
  return "unknown";
}

TransformTrace reduction_pipeline(const Graph& g) {
  if (!is_unicyclic(g)) throw NotUnicyclicError("reduction_pipeline: graph is not unicyclic");
  TransformTrace trace{g, {}, std::nullopt, PipelineOutcome::reduced};
  if (g.order() < 5) {
    trace.outcome = PipelineOutcome::small_order;
    trace.terminal_family = recognize_family(g);
    return trace;
  }

  Graph cur = g;
  auto apply = [&](std::string op, std::vector<StepParam> params, Graph next) {
    trace.steps.push_back(detail::make_step(std::move(op), std::move(params), cur, next));
    cur = std::move(next);
  };
  auto append = [&](std::vector<TransformStep> steps) {
    for (auto& s : steps) trace.steps.push_back(std::move(s));
    cur = trace.steps.back().result;
  };

  // Step 1: star at a maximal-degree cycle vertex.
  CycleStructure cycle = find_cycle(cur);
  const Vertex v = max_degree_cycle_vertex(cur, cycle);
  apply("star_transform", {{"v", v}}, star_transform(cur, v));

  // Step 2: empty the pendant tree of a minimal-degree cycle vertex onto v.
  Vertex u = -1;
  for (Vertex c : cycle.vertices) {
    if (c == v) continue;
    if (u < 0 || cur.degree(c) < cur.degree(u) || (cur.degree(c) == cur.degree(u) && c < u)) u = c;
  }
  apply("relocate_min", {{"u", u}, {"v", v}}, relocate_min(cur, u, v));

  if (is_cycle_graph(cur)) {
    trace.outcome = PipelineOutcome::cycle;
    trace.terminal_family = FamilySpec::cycle(cur.order());
    return trace;
  }

  // Step 3: make u a neighbour of v.
  if (!cycle.adjacent_on_cycle(u, v)) {
    const Vertex v1 = cycle.cycle_neighbors(v).first;
    apply("arc_transform", {{"u", u}, {"e_u", v}, {"e_v", v1}, {"v", v}},
          arc_transform(cur, u, {v, v1}, v));
    cycle = find_cycle(cur);
  }

  // Step 4: while v's other neighbour is heavier than 2 and another local
  // minimum exists, bring that minimum next to v as well.
  while (true) {
    const Vertex other = other_cycle_neighbor(cycle, v, u);
    if (cur.degree(other) == 2) break;
    auto ubar = second_local_min(cur, cycle, u, v);
    if (!ubar) break;
    apply("relocate_min", {{"u", *ubar}, {"v", v}}, relocate_min(cur, *ubar, v));
    if (!cycle.adjacent_on_cycle(*ubar, v)) {
      apply("arc_transform", {{"u", *ubar}, {"e_u", v}, {"e_v", other}, {"v", v}},
            arc_transform(cur, *ubar, {v, other}, v));
      cycle = find_cycle(cur);
    }
  }

  const Vertex other = other_cycle_neighbor(cycle, v, u);
  if (cur.degree(other) == 2) {
    if (cycle.girth() > 3) append(finish_two_neighbors_deg2_steps(cur, v));
  } else {
    append(finish_one_neighbor_deg2_steps(cur, v, u));
  }

  trace.terminal_family = recognize_family(cur);
  if (!trace.terminal_family) {
    throw std::logic_error("reduction_pipeline ended outside the extremal families");
  }
  return trace;
}

}  // namespace gaidx
