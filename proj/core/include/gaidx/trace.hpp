#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaidx/families.hpp"
#include "gaidx/graph.hpp"

namespace gaidx {

struct StepParam {
  std::string name;
  int value = 0;

  friend bool operator==(const StepParam&, const StepParam&) = default;
};

/// One operator application.
struct TransformStep {
  std::string op;
  std::vector<StepParam> params;
  double ga_before = 0.0;
  double ga_after = 0.0;
  Graph result;
};

enum class PipelineOutcome {
  reduced,      // ended in S_{n;3}, S_{p,q;4} or S_{r,k;3}
  cycle,        // input was C_n, nothing to reduce
  small_order,  // n = 3 or 4, classified by inspection
};

std::string to_string(PipelineOutcome outcome);

struct TransformTrace {
  Graph input;
  std::vector<TransformStep> steps;
  std::optional<FamilySpec> terminal_family;
  PipelineOutcome outcome = PipelineOutcome::reduced;

  const Graph& terminal() const { return steps.empty() ? input : steps.back().result; }
};

/// Line-oriented rendering, GA values to 9 decimals.
std::string trace_to_text(const TransformTrace& trace);
/// Pretty-printed JSON document (2-space indent, trailing newline).
std::string trace_to_json(const TransformTrace& trace);

}  // namespace gaidx
