#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "gaidx/graph.hpp"

namespace gaidx {

/// Edge-list text: a header line "n m" followed by m lines "u v" with 0-based
/// ids. Blank lines are ignored. Throws ParseError (with the 1-based line
/// number) on malformed input and GraphError on invalid structure.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

/// graph6 encoding, orders up to 62.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace gaidx
