#include <cmath>
#include <sstream>

#include <json.hpp>

#include "gaidx/families.hpp"
#include "gaidx/index.hpp"
#include "gaidx/tables.hpp"
#include "gaidx/trace.hpp"

namespace gaidx {
namespace {

using nlohmann::ordered_json;

double round9(double x) { return std::round(x * 1e9) / 1e9; }

ordered_json edges_json(const Graph& g) {
  ordered_json out = ordered_json::array();
  for (const Edge& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

std::string params_text(const std::vector<StepParam>& params) {
  std::string out;
  for (const auto& p : params) out += " " + p.name + "=" + std::to_string(p.value);
  return out;
}

}  // namespace

std::string trace_to_text(const TransformTrace& trace) {
  std::ostringstream out;
  out << "input n=" << trace.input.order() << " m=" << trace.input.size()
      << " ga=" << format_fixed(ga_index(trace.input), 9) << '\n';
  int i = 0;
  for (const auto& s : trace.steps) {
    out << "step " << ++i << ' ' << s.op << params_text(s.params) << " ga "
        << format_fixed(s.ga_before, 9) << " -> " << format_fixed(s.ga_after, 9) << '\n';
  }
  out << "outcome " << to_string(trace.outcome) << '\n';
  if (trace.terminal_family) {
    out << "terminal " << trace.terminal_family->key() << ' '
        << trace.terminal_family->display_name() << " ga="
        << format_fixed(ga_index(trace.terminal()), 9) << '\n';
  } else {
    out << "terminal none\n";
  }
  return out.str();
}

std::string trace_to_json(const TransformTrace& trace) {
  ordered_json doc;
  doc["input"] = {{"n", trace.input.order()},
                  {"m", trace.input.size()},
                  {"ga", round9(ga_index(trace.input))},
                  {"edges", edges_json(trace.input)}};
  ordered_json steps = ordered_json::array();
  for (const auto& s : trace.steps) {
    ordered_json params = ordered_json::object();
    for (const auto& p : s.params) params[p.name] = p.value;
    steps.push_back({{"op", s.op},
                     {"params", params},
                     {"ga_before", round9(s.ga_before)},
                     {"ga_after", round9(s.ga_after)},
                     {"edges", edges_json(s.result)}});
  }
  doc["steps"] = steps;
  doc["outcome"] = to_string(trace.outcome);
  if (trace.terminal_family) {
    doc["terminal"] = {{"family", to_string(trace.terminal_family->family())},
                       {"key", trace.terminal_family->key()},
                       {"name", trace.terminal_family->display_name()},
                       {"ga", round9(ga_index(trace.terminal()))}};
  } else {
    doc["terminal"] = nullptr;
  }
  return doc.dump(2) + "\n";
}

}  // namespace gaidx
