#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gaidx/canonical.hpp"
#include "gaidx/graph.hpp"
#include "gaidx/index.hpp"

namespace gaidx {

struct Witness {
  CanonicalKey key;
  std::string graph6;
};

struct BoundViolation {
  Witness graph;
  double ga = 0.0;
};

/// Exhaustive check of GA(S_{n;3}) <= GA(G) <= n over one order.
struct BoundReport {
  int n = 0;
  std::size_t count = 0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double min_ga = 0.0;
  double max_ga = 0.0;
  std::vector<Witness> min_witnesses;  // sorted by key
  std::vector<Witness> max_witnesses;
  std::vector<BoundViolation> violations;
  bool min_attained_by_sn3 = false;
  bool min_unique = false;
  bool max_only_cycle = false;

  /// No violations, C_n is the only maximiser and S_{n;3} a minimiser.
  bool ok() const { return violations.empty() && min_attained_by_sn3 && max_only_cycle; }
};

BoundReport verify_bounds(int n, double tol = kTolerance);

/// Sweep of one operator over all admissible parameter choices.
struct OperatorSweep {
  std::string op;
  long applications = 0;
  long ga_violations = 0;
  long structure_violations = 0;
  double worst_slack = 0.0;  // largest GA(after) - GA(before); <= 0 when monotone
  std::vector<std::string> failures;  // first few, human-readable

  bool ok() const { return ga_violations == 0 && structure_violations == 0; }
};

struct MonotonicityReport {
  int n = 0;
  std::size_t graphs = 0;
  std::vector<OperatorSweep> operators;

  bool ok() const;
  long total_applications() const;
};

/// Applies every transformation at every parameter choice that satisfies
/// its precondition, on every unicyclic graph of order n.
MonotonicityReport verify_monotonicity(int n, double tol = kTolerance);

/// Runs the reduction pipeline on every unicyclic graph of order n.
struct PipelineSweep {
  int n = 0;
  std::size_t graphs = 0;
  std::map<std::string, std::size_t> terminals;  // family name -> count
  long failures = 0;
  std::vector<std::string> failure_details;

  bool ok() const { return failures == 0; }
};

PipelineSweep verify_pipeline(int n, double tol = kTolerance);

std::string bound_reports_to_json(std::span<const BoundReport> reports);
std::string bound_reports_to_text(std::span<const BoundReport> reports);
std::string monotonicity_reports_to_text(std::span<const MonotonicityReport> reports);
std::string monotonicity_reports_to_json(std::span<const MonotonicityReport> reports);
std::string pipeline_sweeps_to_text(std::span<const PipelineSweep> sweeps);

}  // namespace gaidx
