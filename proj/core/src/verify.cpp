#include "gaidx/verify.hpp"

#include <algorithm>
#include <limits>

#include "gaidx/enumerate.hpp"
#include "gaidx/families.hpp"
#include "gaidx/graph_io.hpp"
#include "gaidx/tables.hpp"
#include "gaidx/transform.hpp"
#include "gaidx/unicyclic.hpp"

namespace gaidx {
namespace {

constexpr std::size_t kMaxFailureDetails = 8;

Witness witness_of(const UnicyclicClass& c) { return {c.key, to_graph6(c.graph)}; }

class SweepRecorder {
 public:
  SweepRecorder(std::string op, double tol) : tol_(tol) {
    sweep_.op = std::move(op);
    sweep_.worst_slack = -std::numeric_limits<double>::infinity();
  }

  void record(const Graph& before, const Graph& after, const std::string& where) {
    ++sweep_.applications;
    const double slack = ga_index(after) - ga_index(before);
    sweep_.worst_slack = std::max(sweep_.worst_slack, slack);
    if (slack > tol_) {
      ++sweep_.ga_violations;
      note(where + ": GA grew by " + format_fixed(slack, 12));
    }
    if (after.order() != before.order() || !is_unicyclic(after)) {
      ++sweep_.structure_violations;
      note(where + ": result is not unicyclic of the same order");
    }
  }

  void ga_error(const std::string& where, const std::string& what) {
    ++sweep_.applications;
    ++sweep_.ga_violations;
    note(where + ": " + what);
  }

  void error(const std::string& where, const std::string& what) {
    ++sweep_.applications;
    ++sweep_.structure_violations;
    note(where + ": " + what);
  }

  OperatorSweep finish() {
    if (sweep_.applications == 0) sweep_.worst_slack = 0.0;
    return std::move(sweep_);
  }

 private:
  void note(std::string s) {
    if (sweep_.failures.size() < kMaxFailureDetails) sweep_.failures.push_back(std::move(s));
  }

  double tol_;
  OperatorSweep sweep_;
};

template <class Fn>
void guarded(SweepRecorder& rec, const Graph& g, const std::string& where, Fn&& fn) {
  try {
    Graph out = fn();
    rec.record(g, out, where);
  } catch (const MonotonicityViolation& e) {
    rec.ga_error(where, e.what());
  } catch (const std::exception& e) {
    rec.error(where, e.what());
  }
}

}  // namespace

BoundReport verify_bounds(int n, double tol) {
  const auto classes = enumerate_unicyclic(n);
  BoundReport r;
  r.n = n;
  r.count = classes.size();
  const BoundInterval bounds = bound_interval(n);
  r.lower_bound = bounds.lower;
  r.upper_bound = bounds.upper;

  std::vector<double> ga(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) ga[i] = ga_index(classes[i].graph);
  r.min_ga = *std::min_element(ga.begin(), ga.end());
  r.max_ga = *std::max_element(ga.begin(), ga.end());

  const CanonicalKey sn3 = canonical_form(make_family(FamilySpec::sn3(n)));
  const CanonicalKey cn = canonical_form(Graph::cycle(n));
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (ga[i] <= r.min_ga + tol) r.min_witnesses.push_back(witness_of(classes[i]));
    if (ga[i] >= r.max_ga - tol) r.max_witnesses.push_back(witness_of(classes[i]));
    if (ga[i] < r.lower_bound - tol || ga[i] > r.upper_bound + tol) {
      r.violations.push_back({witness_of(classes[i]), ga[i]});
    }
  }
  r.min_attained_by_sn3 =
      std::any_of(r.min_witnesses.begin(), r.min_witnesses.end(),
                  [&](const Witness& w) { return w.key == sn3; }) &&
      std::abs(r.min_ga - r.lower_bound) <= tol;
  r.min_unique = r.min_witnesses.size() == 1;
  r.max_only_cycle = r.max_witnesses.size() == 1 && r.max_witnesses.front().key == cn &&
                     std::abs(r.max_ga - r.upper_bound) <= tol;
  return r;
}

bool MonotonicityReport::ok() const {
  return std::all_of(operators.begin(), operators.end(), [](const auto& s) { return s.ok(); });
}

long MonotonicityReport::total_applications() const {
  long total = 0;
  for (const auto& s : operators) total += s.applications;
  return total;
}

MonotonicityReport verify_monotonicity(int n, double tol) {
  const auto classes = enumerate_unicyclic(n);
  SweepRecorder star("star_transform", tol);
  SweepRecorder relocate("relocate_min", tol);
  SweepRecorder arc("arc_transform", tol);
  SweepRecorder two("finish_two_neighbors_deg2", tol);
  SweepRecorder one("finish_one_neighbor_deg2", tol);

  for (const auto& c : classes) {
    const Graph& g = c.graph;
    const CycleStructure cycle = find_cycle(g);
    const std::string tag = to_graph6(g);
    auto where = [&](const std::string& op, std::initializer_list<int> args) {
      std::string s = tag + " " + op + "(";
      bool first = true;
      for (int a : args) {
        s += (first ? "" : ",") + std::to_string(a);
        first = false;
      }
      return s + ")";
    };

    for (Vertex v : cycle.vertices) {
      if (!check_star_transform(g, v)) {
        guarded(star, g, where("star", {v}), [&] { return star_transform(g, v); });
      }
      for (Vertex u : cycle.vertices) {
        if (!check_relocate_min(g, u, v)) {
          guarded(relocate, g, where("relocate", {u, v}), [&] { return relocate_min(g, u, v); });
        }
        if (u == v || cycle.adjacent_on_cycle(u, v)) continue;
        // One representative edge per arc: the cycle edges at u.
        for (int step : {+1, -1}) {
          const Edge e{u, cycle.step_from(u, step)};
          if (!check_arc_transform(g, u, e, v)) {
            guarded(arc, g, where("arc", {u, e.v, v}), [&] { return arc_transform(g, u, e, v); });
          }
        }
      }
      if (!check_finish_two_neighbors_deg2(g, v)) {
        guarded(two, g, where("finish_two", {v}), [&] { return finish_two_neighbors_deg2(g, v); });
      }
      for (Vertex u : cycle.vertices) {
        if (!check_finish_one_neighbor_deg2(g, v, u)) {
          guarded(one, g, where("finish_one", {v, u}),
                  [&] { return finish_one_neighbor_deg2(g, v, u); });
        }
      }
    }
  }

  MonotonicityReport report;
  report.n = n;
  report.graphs = classes.size();
  for (SweepRecorder* rec : {&star, &relocate, &arc, &two, &one}) {
    report.operators.push_back(rec->finish());
  }
  return report;
}

PipelineSweep verify_pipeline(int n, double tol) {
  const auto classes = enumerate_unicyclic(n);
  PipelineSweep sweep;
  sweep.n = n;
  sweep.graphs = classes.size();
  const double lower = ga_sn3_closed(n);
  auto fail = [&](std::string s) {
    ++sweep.failures;
    if (sweep.failure_details.size() < kMaxFailureDetails) sweep.failure_details.push_back(std::move(s));
  };
  for (const auto& c : classes) {
    const std::string tag = to_graph6(c.graph);
    try {
      const TransformTrace trace = reduction_pipeline(c.graph);
      if (!trace.terminal_family) {
        fail(tag + ": no terminal family");
        continue;
      }
      ++sweep.terminals[to_string(trace.terminal_family->family())];
      const double in = ga_index(c.graph);
      const double out = ga_index(trace.terminal());
      if (out > in + tol) fail(tag + ": terminal GA exceeds input GA");
      if (out < lower - tol) fail(tag + ": terminal GA below GA(S_{n;3})");
      if (!are_isomorphic(trace.terminal(), make_family(*trace.terminal_family))) {
        fail(tag + ": terminal graph does not match " + trace.terminal_family->key());
      }
      for (const auto& step : trace.steps) {
        if (step.ga_after > step.ga_before + tol) fail(tag + ": step " + step.op + " increased GA");
        if (step.result.order() != n || !is_unicyclic(step.result)) {
          fail(tag + ": step " + step.op + " broke unicyclicity");
        }
      }
    } catch (const std::exception& e) {
      fail(tag + ": " + e.what());
    }
  }
  return sweep;
}

}  // namespace gaidx
