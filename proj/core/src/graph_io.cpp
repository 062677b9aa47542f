#include "gaidx/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "gaidx/error.hpp"

namespace gaidx {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

int parse_int(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" +
                         std::string(token) + "'",
                     line);
  }
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  int m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    auto tokens = split_ws(raw);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers, got " +
                           std::to_string(tokens.size()) + " tokens",
                       line_no);
    }
    const int a = parse_int(tokens[0], line_no);
    const int b = parse_int(tokens[1], line_no);
    if (n < 0) {
      if (a < 1 || b < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid header '" + raw + "'",
                         line_no);
      }
      n = a;
      m = b;
      continue;
    }
    if (static_cast<int>(edges.size()) == m) {
      throw ParseError("line " + std::to_string(line_no) + ": more than the declared " +
                           std::to_string(m) + " edges",
                       line_no);
    }
    edges.push_back({a, b});
  }
  if (n < 0) throw ParseError("empty input: missing 'n m' header", line_no);
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()),
                     line_no);
  }
  return Graph::build(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw DomainError("graph6 export supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int bits = 0;
  int acc = 0;
  // Upper triangle, column-major: (0,1),(0,2),(1,2),(0,3),...
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("empty graph6 string", 1);
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n < 1 || n > 62) throw ParseError("unsupported graph6 order", 1);
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (text.size() != 1 + (pairs + 5) / 6) throw ParseError("graph6 length mismatch", 1);
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int chunk = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (chunk < 0 || chunk > 63) throw ParseError("invalid graph6 character", 1);
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph::build(n, edges);
}

}  // namespace gaidx
