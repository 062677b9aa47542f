#pragma once

#include <vector>

#include "gaidx/graph.hpp"

namespace gaidx {

/// Absolute tolerance used for every GA equality or inequality check.
inline constexpr double kTolerance = 1e-9;

/// Contribution of one edge. The endpoints are oriented so that du <= dv,
/// hence rd = dv / du >= 1 and ga = ratio_term(rd).
struct EdgeContribution {
  Vertex u = 0;
  Vertex v = 0;
  int du = 0;
  int dv = 0;
  double rd = 1.0;
  double ga = 1.0;
};

/// 2*sqrt(a*b)/(a+b): the GA contribution of an edge with endpoint degrees a, b.
double ga_term(double a, double b);
/// (a+b)/(2*sqrt(a*b)): the AG contribution.
double ag_term(double a, double b);

/// 2*sqrt(x)/(x+1) on [1, inf). Equals the contribution of an edge whose
/// degree ratio is x, e.g. a pendant edge at a vertex of degree x.
double ratio_term(double x);
/// 2*sqrt(2)*sqrt(x)/(x+2) on [2, inf): contribution of an edge joining a
/// degree-2 vertex to a vertex of degree x.
double degree_two_term(double x);

/// Throws GraphError when e is not an edge of g.
EdgeContribution edge_contribution(const Graph& g, Edge e);
std::vector<EdgeContribution> edge_contributions(const Graph& g);

/// Both throw DomainError on a graph without edges.
double ga_index(const Graph& g);
double ag_index(const Graph& g);

}  // namespace gaidx
