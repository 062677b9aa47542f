#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "gaidx/tables.hpp"
#include "gaidx/verify.hpp"

namespace gaidx {
namespace {

using nlohmann::ordered_json;

double round9(double x) { return std::round(x * 1e9) / 1e9; }

ordered_json witnesses_json(const std::vector<Witness>& ws) {
  ordered_json out = ordered_json::array();
  for (const auto& w : ws) out.push_back({{"key", w.key.hex()}, {"graph6", w.graph6}});
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string bound_reports_to_json(std::span<const BoundReport> reports) {
  ordered_json doc;
  ordered_json orders = ordered_json::array();
  bool ok = true;
  for (const auto& r : reports) {
    ordered_json violations = ordered_json::array();
    for (const auto& v : r.violations) {
      violations.push_back({{"key", v.graph.key.hex()}, {"graph6", v.graph.graph6}, {"ga", round9(v.ga)}});
    }
    orders.push_back({{"n", r.n},
                      {"count", r.count},
                      {"lower_bound", round9(r.lower_bound)},
                      {"upper_bound", round9(r.upper_bound)},
                      {"min_ga", round9(r.min_ga)},
                      {"max_ga", round9(r.max_ga)},
                      {"min_witnesses", witnesses_json(r.min_witnesses)},
                      {"max_witnesses", witnesses_json(r.max_witnesses)},
                      {"min_attained_by_sn3", r.min_attained_by_sn3},
                      {"min_unique", r.min_unique},
                      {"max_only_cycle", r.max_only_cycle},
                      {"violations", violations}});
    ok = ok && r.ok();
  }
  doc["orders"] = orders;
  doc["ok"] = ok;
  return doc.dump(2) + "\n";
}

std::string bound_reports_to_text(std::span<const BoundReport> reports) {
  std::ostringstream out;
  out << std::left << std::setw(4) << "n" << std::setw(8) << "count" << std::setw(14) << "lower"
      << std::setw(14) << "min_ga" << std::setw(14) << "max_ga" << std::setw(8) << "sn3min"
      << std::setw(8) << "unique" << std::setw(8) << "Cn-only"
      << "violations\n";
  for (const auto& r : reports) {
    out << std::setw(4) << r.n << std::setw(8) << r.count << std::setw(14)
        << format_fixed(r.lower_bound, 9) << std::setw(14) << format_fixed(r.min_ga, 9)
        << std::setw(14) << format_fixed(r.max_ga, 9) << std::setw(8)
        << yes_no(r.min_attained_by_sn3) << std::setw(8) << yes_no(r.min_unique) << std::setw(8)
        << yes_no(r.max_only_cycle) << r.violations.size() << '\n';
  }
  return out.str();
}

std::string monotonicity_reports_to_text(std::span<const MonotonicityReport> reports) {
  std::ostringstream out;
  for (const auto& r : reports) {
    out << "n=" << r.n << " graphs=" << r.graphs << " applications=" << r.total_applications()
        << (r.ok() ? " ok" : " FAILED") << '\n';
    for (const auto& s : r.operators) {
      out << "  " << std::left << std::setw(28) << s.op << " applications=" << s.applications
          << " ga_violations=" << s.ga_violations << " structure_violations="
          << s.structure_violations << " worst_slack=" << format_fixed(s.worst_slack, 9) << '\n';
      for (const auto& f : s.failures) out << "    " << f << '\n';
    }
  }
  return out.str();
}

std::string monotonicity_reports_to_json(std::span<const MonotonicityReport> reports) {
  ordered_json doc;
  ordered_json orders = ordered_json::array();
  bool ok = true;
  for (const auto& r : reports) {
    ordered_json ops = ordered_json::array();
    for (const auto& s : r.operators) {
      ops.push_back({{"op", s.op},
                     {"applications", s.applications},
                     {"ga_violations", s.ga_violations},
                     {"structure_violations", s.structure_violations},
                     {"worst_slack", round9(s.worst_slack)},
                     {"failures", s.failures}});
    }
    orders.push_back({{"n", r.n}, {"graphs", r.graphs}, {"operators", ops}, {"ok", r.ok()}});
    ok = ok && r.ok();
  }
  doc["orders"] = orders;
  doc["ok"] = ok;
  return doc.dump(2) + "\n";
}

std::string pipeline_sweeps_to_text(std::span<const PipelineSweep> sweeps) {
  std::ostringstream out;
  for (const auto& s : sweeps) {
    out << "n=" << s.n << " graphs=" << s.graphs;
    for (const auto& [family, count] : s.terminals) out << ' ' << family << '=' << count;
    out << " failures=" << s.failures << '\n';
    for (const auto& f : s.failure_details) out << "  " << f << '\n';
  }
  return out.str();
}

}  // namespace gaidx
