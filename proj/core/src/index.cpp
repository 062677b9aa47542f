#include "gaidx/index.hpp"

#include <cmath>
#include <string>

#include "gaidx/error.hpp"

namespace gaidx {

double ga_term(double a, double b) { return 2.0 * std::sqrt(a * b) / (a + b); }

double ag_term(double a, double b) { return (a + b) / (2.0 * std::sqrt(a * b)); }

double ratio_term(double x) {
  if (!(x >= 1.0)) throw DomainError("ratio_term is defined on [1, inf), got " + std::to_string(x));
  return 2.0 * std::sqrt(x) / (x + 1.0);
}

double degree_two_term(double x) {
  if (!(x >= 2.0)) {
    throw DomainError("degree_two_term is defined on [2, inf), got " + std::to_string(x));
  }
  return 2.0 * std::sqrt(2.0) * std::sqrt(x) / (x + 2.0);
}

EdgeContribution edge_contribution(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw GraphError("edge " + to_string(e) + " is not in the graph", e);
  EdgeContribution c;
  c.u = e.u;
  c.v = e.v;
  c.du = g.degree(e.u);
  c.dv = g.degree(e.v);
  if (c.du > c.dv) {
    std::swap(c.u, c.v);
    std::swap(c.du, c.dv);
  }
  c.rd = static_cast<double>(c.dv) / c.du;
  c.ga = ga_term(c.du, c.dv);
  return c;
}

std::vector<EdgeContribution> edge_contributions(const Graph& g) {
  std::vector<EdgeContribution> out;
  out.reserve(g.size());
  for (const Edge& e : g.edges()) out.push_back(edge_contribution(g, e));
  return out;
}

double ga_index(const Graph& g) {
  if (g.size() == 0) throw DomainError("GA index of a graph without edges is undefined");
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += ga_term(g.degree(e.u), g.degree(e.v));
  return sum;
}

double ag_index(const Graph& g) {
  if (g.size() == 0) throw DomainError("AG index of a graph without edges is undefined");
  double sum = 0.0;
  for (const Edge& e : g.edges()) sum += ag_term(g.degree(e.u), g.degree(e.v));
  return sum;
}

}  // namespace gaidx
