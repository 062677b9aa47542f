#include "gaidx_cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaidx/enumerate.hpp"
#include "gaidx/error.hpp"
#include "gaidx/families.hpp"
#include "gaidx/graph_io.hpp"
#include "gaidx/index.hpp"
#include "gaidx/tables.hpp"
#include "gaidx/transform.hpp"
#include "gaidx/unicyclic.hpp"
#include "gaidx/verify.hpp"

namespace gaidx::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::string format;  // empty: command default
  double tol = kTolerance;
  bool trace = false;
  std::string out_path;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double round9(double x) { return std::round(x * 1e9) / 1e9; }

std::pair<int, int> parse_range(const std::string& text) {
  auto parse = [&](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) {
      throw InputError("invalid range '" + text + "' (expected N or A..B)");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse(text);
    return {v, v};
  }
  return {parse(std::string_view(text).substr(0, dots)), parse(std::string_view(text).substr(dots + 2))};
}

Graph load_graph(const std::string& path, const std::string& input_format) {
  if (input_format == "graph6") {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'", 0);
    std::string line;
    std::getline(in, line);
    return from_graph6(line);
  }
  return load_edge_list(path);
}

// ---------------------------------------------------------------------------

int cmd_compute(const Options& opt, const std::string& path, const std::string& input_format,
                std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(path, input_format);
  if (!is_connected(g)) err << "warning: graph is disconnected\n";
  const double ga = ga_index(g);
  const double ag = ag_index(g);
  const bool unicyclic = is_unicyclic(g);
  const std::optional<int> girth =
      unicyclic ? std::optional<int>(find_cycle(g).girth()) : std::nullopt;
  auto contributions = edge_contributions(g);
  std::stable_sort(contributions.begin(), contributions.end(),
                   [](const auto& a, const auto& b) { return a.rd < b.rd; });

  const std::string format = opt.format.empty() ? "text" : opt.format;
  if (format == "json") {
    ordered_json doc;
    doc["n"] = g.order();
    doc["m"] = g.size();
    doc["ga"] = round9(ga);
    doc["ag"] = round9(ag);
    doc["connected"] = is_connected(g);
    doc["unicyclic"] = unicyclic;
    doc["girth"] = girth ? ordered_json(*girth) : ordered_json(nullptr);
    ordered_json edges = ordered_json::array();
    for (const auto& c : contributions) {
      edges.push_back({{"u", c.u}, {"v", c.v}, {"du", c.du}, {"dv", c.dv},
                       {"rd", round9(c.rd)}, {"ga", round9(c.ga)}});
    }
    doc["edges"] = edges;
    out << doc.dump(2) << '\n';
  } else if (format == "csv") {
    out << "u,v,du,dv,rd,ga\n";
    for (const auto& c : contributions) {
      out << c.u << ',' << c.v << ',' << c.du << ',' << c.dv << ',' << format_fixed(c.rd, 9) << ','
          << format_fixed(c.ga, 9) << '\n';
    }
  } else {
    out << "n " << g.order() << '\n'
        << "m " << g.size() << '\n'
        << "ga " << format_fixed(ga, 9) << '\n'
        << "ag " << format_fixed(ag, 9) << '\n'
        << "unicyclic " << (unicyclic ? "yes" : "no") << '\n'
        << "girth " << (girth ? std::to_string(*girth) : "-") << '\n'
        << "edges u v du dv rd ga\n";
    for (const auto& c : contributions) {
      out << "  " << c.u << ' ' << c.v << ' ' << c.du << ' ' << c.dv << ' '
          << format_fixed(c.rd, 9) << ' ' << format_fixed(c.ga, 9) << '\n';
    }
  }
  return kExitOk;
}

FamilySpec parse_family(const std::string& kind, const std::vector<int>& params) {
  const Family family = family_from_string(kind);
  const std::size_t want = (family == Family::cycle || family == Family::sn3) ? 1 : 2;
  if (params.size() != want) {
    throw InputError("family " + kind + " takes " + std::to_string(want) + " parameter(s)");
  }
  switch (family) {
    case Family::cycle: return FamilySpec::cycle(params[0]);
    case Family::sn3: return FamilySpec::sn3(params[0]);
    case Family::spq4: return FamilySpec::spq4(params[0], params[1]);
    case Family::srk3: return FamilySpec::srk3(params[0], params[1]);
  }
  throw InputError("unknown family");
}

int cmd_family(const Options& opt, const std::string& kind, const std::vector<int>& params,
               std::ostream& out) {
  const FamilySpec spec = parse_family(kind, params);
  const Graph g = make_family(spec);
  if (opt.format == "json") {
    ordered_json edges = ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    ordered_json doc;
    doc["family"] = to_string(spec.family());
    doc["key"] = spec.key();
    doc["name"] = spec.display_name();
    doc["n"] = g.order();
    doc["ga"] = round9(ga_index(g));
    doc["ga_closed"] = round9(ga_closed(spec));
    doc["edges"] = edges;
    out << doc.dump(2) << '\n';
  } else {
    write_edge_list(out, g);
  }
  return kExitOk;
}

int cmd_tables(const Options& opt, int which, const std::string& rows, const std::string& cols,
               std::ostream& out) {
  ComparisonTable table = default_table(which);
  if (!rows.empty() || !cols.empty()) {
    auto [r0, r1] = rows.empty() ? std::pair{table.row_first, table.row_last} : parse_range(rows);
    auto [c0, c1] = cols.empty() ? std::pair{table.col_first, table.col_last} : parse_range(cols);
    table = compute_table(which, r0, r1, c0, c1);
  }
  const std::string format = opt.format.empty() ? "csv" : opt.format;
  if (format == "json") {
    ordered_json doc;
    doc["table"] = which;
    ordered_json cells = ordered_json::array();
    for (int r = table.row_first; r <= table.row_last; ++r) {
      for (int c = table.col_first; c <= table.col_last; ++c) {
        const auto& cell = table.at(r, c);
        if (!cell) continue;
        cells.push_back({{"row", r}, {"col", c},
                         {which == 1 ? "A" : "C", std::stod(format_fixed(cell->pendant, 4))},
                         {which == 1 ? "B" : "D", std::stod(format_fixed(cell->cycle, 4))}});
      }
    }
    doc["cells"] = cells;
    out << doc.dump(2) << '\n';
  } else if (format == "text") {
    write_table_text(out, table);
  } else {
    write_table_csv(out, table);
  }
  return kExitOk;
}

std::string small_order_name(const Graph& g) {
  if (g.order() == 3) return "C_3";
  return is_cycle_graph(g) ? "C_4" : "paw";
}

int cmd_reduce(const Options& opt, const std::string& path, const std::string& input_format,
               std::ostream& out) {
  const Graph g = load_graph(path, input_format);
  if (!is_unicyclic(g)) throw NotUnicyclicError("input graph is not unicyclic");
  const TransformTrace trace = reduction_pipeline(g);
  if (opt.format == "json") {
    out << trace_to_json(trace);
    return kExitOk;
  }
  if (opt.trace) {
    out << trace_to_text(trace);
  } else {
    out << "input_ga " << format_fixed(ga_index(g), 9) << '\n'
        << "steps " << trace.steps.size() << '\n'
        << "outcome " << to_string(trace.outcome) << '\n'
        << "terminal " << (trace.terminal_family ? trace.terminal_family->key() : "none") << '\n'
        << "terminal_ga " << format_fixed(ga_index(trace.terminal()), 9) << '\n';
  }
  if (trace.outcome == PipelineOutcome::small_order) {
    out << "inspection " << small_order_name(g) << " (order " << g.order()
        << " is settled by inspection)\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& opt, const std::string& range, bool monotonicity, bool pipeline,
               std::ostream& out) {
  auto [lo, hi] = parse_range(range);
  if (lo > hi) std::swap(lo, hi);
  if (lo < kMinEnumerationOrder || hi > kMaxEnumerationOrder) {
    throw InputError("range too large: orders must lie in [" + std::to_string(kMinEnumerationOrder) +
                     ", " + std::to_string(kMaxEnumerationOrder) + "]");
  }
  std::vector<BoundReport> bounds;
  std::vector<MonotonicityReport> mono;
  std::vector<PipelineSweep> sweeps;
  bool ok = true;
  for (int n = lo; n <= hi; ++n) {
    bounds.push_back(verify_bounds(n, opt.tol));
    ok = ok && bounds.back().ok();
    if (monotonicity && n >= 5) {
      mono.push_back(verify_monotonicity(n, opt.tol));
      ok = ok && mono.back().ok();
    }
    if (pipeline && n >= 5) {
      sweeps.push_back(verify_pipeline(n, opt.tol));
      ok = ok && sweeps.back().ok();
    }
  }
  if (opt.format == "json") {
    ordered_json doc;
    doc["bounds"] = ordered_json::parse(bound_reports_to_json(bounds));
    if (monotonicity) doc["monotonicity"] = ordered_json::parse(monotonicity_reports_to_json(mono));
    doc["ok"] = ok;
    out << doc.dump(2) << '\n';
  } else {
    out << bound_reports_to_text(bounds);
    if (monotonicity) out << monotonicity_reports_to_text(mono);
    if (pipeline) out << pipeline_sweeps_to_text(sweeps);
    out << (ok ? "verified" : "VERIFICATION FAILED") << '\n';
  }
  return ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"GA index tools for unicyclic graphs", "gaidx"};
  app.require_subcommand(1, 1);

  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--tol", opt.tol, "Absolute tolerance for GA comparisons")
      ->check(CLI::PositiveNumber);
  app.add_flag("--trace", opt.trace, "Print every reduction step");
  app.add_option("--out", opt.out_path, "Write output to this file instead of stdout");

  std::string path;
  std::string input_format = "edgelist";
  auto* compute = app.add_subcommand("compute", "GA, AG and per-edge contributions of a graph");
  compute->add_option("path", path, "Edge-list file")->required();
  compute->add_option("--input-format", input_format)->check(CLI::IsMember({"edgelist", "graph6"}));

  std::string kind;
  std::vector<int> params;
  auto* family = app.add_subcommand("family", "Build an extremal family member");
  family->add_option("kind", kind, "cycle | sn3 | spq4 | srk3")->required();
  family->add_option("params", params, "n, or p q, or r k")->required();

  int which = 1;
  std::string rows;
  std::string cols;
  auto* tables = app.add_subcommand("tables", "Comparison tables A/B (1) or C/D (2)");
  tables->add_option("--which", which)->check(CLI::IsMember({1, 2}));
  tables->add_option("--rows", rows, "Row range, e.g. 2..7");
  tables->add_option("--cols", cols, "Column range, e.g. 2..4");

  auto* reduce = app.add_subcommand("reduce", "Run the GA-decreasing reduction pipeline");
  reduce->add_option("path", path, "Edge-list file")->required();
  reduce->add_option("--input-format", input_format)->check(CLI::IsMember({"edgelist", "graph6"}));

  std::string range;
  bool monotonicity = false;
  bool pipeline = false;
  auto* verify = app.add_subcommand("verify", "Exhaustively check the GA bounds");
  verify->add_option("range", range, "Order N or range A..B")->required();
  verify->add_flag("--monotonicity", monotonicity, "Also sweep every transformation");
  verify->add_flag("--pipeline", pipeline, "Also run the reduction pipeline on every graph");

  for (auto* sub : {compute, family, tables, reduce, verify}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*compute) code = cmd_compute(opt, path, input_format, buffer, err);
    if (*family) code = cmd_family(opt, kind, params, buffer);
    if (*tables) code = cmd_tables(opt, which, rows, cols, buffer);
    if (*reduce) code = cmd_reduce(opt, path, input_format, buffer);
    if (*verify) code = cmd_verify(opt, range, monotonicity, pipeline, buffer);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  if (!opt.out_path.empty()) {
    std::ofstream file(opt.out_path);
    if (!file) {
      err << "error: cannot write '" << opt.out_path << "'\n";
      return kExitInput;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return code;
}

}  // namespace gaidx::cli
