#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaidx/error.hpp"
#include "gaidx/graph.hpp"
#include "gaidx/trace.hpp"

namespace gaidx {

/// An operator was called on a configuration outside its hypothesis.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& op, const std::string& reason)
      : Error(op + ": " + reason), op_(op), reason_(reason) {}
  const std::string& op() const noexcept { return op_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::string op_;
  std::string reason_;
};

/// The two-neighbour finishing move got a girth-3 graph, which under its
/// other hypotheses is already S_{n;3}.
class GirthThreeError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Runtime GA check failed: an operator produced a larger index.
class MonotonicityViolation : public Error {
 public:
  using Error::Error;
};

/// When enabled, every operator recomputes GA before and after and throws
/// MonotonicityViolation if it grew by more than kTolerance. Defaults to on
/// in builds without NDEBUG.
void set_monotonicity_checks(bool enabled);
bool monotonicity_checks_enabled();

// Each operator has a `check_*` companion returning the reason the
// precondition fails, or nullopt when the operator applies. The operator
// itself throws NotUnicyclicError for non-unicyclic input and
// PreconditionError carrying the same reason otherwise.

/// Rearranges the pendant tree T_v into a star centred at v. v must be a
/// local maximum cycle vertex (a maximal-degree cycle vertex always is).
std::optional<std::string> check_star_transform(const Graph& g, Vertex v);
Graph star_transform(const Graph& g, Vertex v);

/// Moves every edge of T_u to a pendant edge at v, leaving u with degree 2.
/// v: local maximum with star T_v. u: local minimum, u != v.
std::optional<std::string> check_relocate_min(const Graph& g, Vertex u, Vertex v);
Graph relocate_min(const Graph& g, Vertex u, Vertex v);

/// Shortens the cycle along the (u,v)-arc containing cycle edge e. Interior
/// pendant trees and the arc's cycle edges except the one at u become
/// pendant edges at v, and v takes the place of u's arc neighbour x, so u
/// and v end up adjacent. x and the other interior vertices keep their ids
/// as new leaves of v.
/// u, v: non-adjacent cycle vertices. v: local maximum with star T_v.
/// Every interior vertex w: d(u) <= d(w) <= d(v).
std::optional<std::string> check_arc_transform(const Graph& g, Vertex u, Edge e, Vertex v);
Graph arc_transform(const Graph& g, Vertex u, Edge e, Vertex v);

/// Finishing move when both cycle neighbours of v have degree 2: reduces
/// the girth to 4 around the heaviest remaining cycle vertex and returns
/// some S_{p,q;4}. Requires girth >= 4 (GirthThreeError otherwise), v of
/// maximal cycle degree, T_v a star.
std::optional<std::string> check_finish_two_neighbors_deg2(const Graph& g, Vertex v);
std::vector<TransformStep> finish_two_neighbors_deg2_steps(const Graph& g, Vertex v);
Graph finish_two_neighbors_deg2(const Graph& g, Vertex v);

/// Finishing move when u is the only degree-2 cycle neighbour of v and the
/// only local minimum: reduces to girth 3, then ends in S_{r,k;3} or, when
/// the far cycle vertex has a heavier tree neighbour, S_{p,q;4}.
std::optional<std::string> check_finish_one_neighbor_deg2(const Graph& g, Vertex v, Vertex u);
std::vector<TransformStep> finish_one_neighbor_deg2_steps(const Graph& g, Vertex v, Vertex u);
Graph finish_one_neighbor_deg2(const Graph& g, Vertex v, Vertex u);

/// Runs the whole reduction: star at a maximal-degree cycle vertex v,
/// relocate the minimal-degree vertex u onto v, pull u next to v with an
/// arc transformation, treat a second local minimum the same way, then the
/// matching finishing move. Ties choose the smallest id.
/// Orders 3 and 4 return a step-free trace with outcome small_order.
/// Throws NotUnicyclicError for other input.
TransformTrace reduction_pipeline(const Graph& g);

}  // namespace gaidx
