#include "gaidx/families.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gaidx/error.hpp"
#include "gaidx/index.hpp"
#include "gaidx/unicyclic.hpp"

namespace gaidx {

std::string to_string(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::sn3: return "sn3";
    case Family::spq4: return "spq4";
    case Family::srk3: return "srk3";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::cycle, Family::sn3, Family::spq4, Family::srk3}) {
    if (to_string(f) == name) return f;
  }
  throw DomainError("unknown family '" + name + "' (expected cycle, sn3, spq4 or srk3)");
}

FamilySpec FamilySpec::cycle(int n) {
  if (n < 3) throw DomainError("cycle requires n >= 3, got " + std::to_string(n));
  return {Family::cycle, n, 0};
}

FamilySpec FamilySpec::sn3(int n) {
  if (n < 3) throw DomainError("S_{n;3} requires n >= 3, got " + std::to_string(n));
  return {Family::sn3, n, 0};
}

FamilySpec FamilySpec::spq4(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("S_{p,q;4} requires p, q >= 0");
  return {Family::spq4, std::max(p, q), std::min(p, q)};
}

FamilySpec FamilySpec::srk3(int r, int k) {
  if (r < 0 || k < 0) throw DomainError("S_{r,k;3} requires r, k >= 0");
  return {Family::srk3, std::max(r, k), std::min(r, k)};
}

int FamilySpec::order() const noexcept {
  switch (family_) {
    case Family::cycle:
    case Family::sn3: return first_;
    case Family::spq4: return first_ + second_ + 4;
    case Family::srk3: return first_ + second_ + 3;
  }
  return 0;
}

std::string FamilySpec::display_name() const {
  switch (family_) {
    case Family::cycle: return "C_" + std::to_string(first_);
    case Family::sn3: return "S_{" + std::to_string(first_) + ";3}";
    case Family::spq4:
      return "S_{" + std::to_string(first_) + "," + std::to_string(second_) + ";4}";
    case Family::srk3:
      return "S_{" + std::to_string(first_) + "," + std::to_string(second_) + ";3}";
  }
  return {};
}

std::string FamilySpec::key() const {
  if (family_ == Family::cycle || family_ == Family::sn3) {
    return to_string(family_) + "(" + std::to_string(first_) + ")";
  }
  return to_string(family_) + "(" + std::to_string(first_) + "," + std::to_string(second_) + ")";
}

namespace {

Graph cycle_with_pendants(int girth, const std::vector<std::pair<Vertex, int>>& pendants) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < girth; ++i) edges.push_back({i, (i + 1) % girth});
  Vertex next = girth;
  for (auto [at, count] : pendants) {
    for (int i = 0; i < count; ++i) edges.push_back({at, next++});
  }
  return Graph::build(next, edges);
}

double f(double x) { return ratio_term(x); }
double g(double x) { return degree_two_term(x); }

}  // namespace

Graph make_family(const FamilySpec& spec) {
  switch (spec.family()) {
    case Family::cycle: return Graph::cycle(spec.first());
    case Family::sn3: return cycle_with_pendants(3, {{0, spec.first() - 3}});
    case Family::spq4: return cycle_with_pendants(4, {{0, spec.first()}, {2, spec.second()}});
    case Family::srk3: return cycle_with_pendants(3, {{0, spec.first()}, {1, spec.second()}});
  }
  throw DomainError("unknown family");
}

double ga_sn3_closed(int n) {
  if (n < 3) throw DomainError("GA(S_{n;3}) requires n >= 3, got " + std::to_string(n));
  const double x = n;
  return 1.0 + (2.0 * x * x + 4.0 * (std::sqrt(2.0) - 1.0) * x - 6.0) * std::sqrt(x - 1.0) /
                   (x * (x + 1.0));
}

double ga_spq4_closed(int p, int q) {
  if (p < 0 || q < 0) throw DomainError("GA(S_{p,q;4}) requires p, q >= 0");
  return p * f(p + 2) + 2.0 * g(p + 2) + 2.0 * g(q + 2) + q * f(q + 2);
}

double ga_srk3_closed(int r, int k) {
  if (r < 0 || k < 0) throw DomainError("GA(S_{r,k;3}) requires r, k >= 0");
  return r * f(r + 2) + g(r + 2) + g(k + 2) + k * f(k + 2) +
         2.0 * std::sqrt(r + 2.0) * std::sqrt(k + 2.0) / (r + k + 4.0);
}

double ga_closed(const FamilySpec& spec) {
  switch (spec.family()) {
    case Family::cycle: return spec.first();
    case Family::sn3: return ga_sn3_closed(spec.first());
    case Family::spq4: return ga_spq4_closed(spec.first(), spec.second());
    case Family::srk3: return ga_srk3_closed(spec.first(), spec.second());
  }
  return 0.0;
}

PendantCyclePair compare_AB(int p, int q) {
  if (q < 0 || p < q) {
    throw DomainError("A/B require p >= q >= 0, got p=" + std::to_string(p) +
                      ", q=" + std::to_string(q));
  }
  const double top = p + q + 3;
  return {p * (f(p + 2) - f(top)) + q * (f(q + 2) - f(top)),
          2.0 * g(p + 2) + 2.0 * g(q + 2) - 2.0 * g(top) - f(top)};
}

PendantCyclePair compare_CD(int r, int k) {
  if (k < 1 || r < k) {
    throw DomainError("C/D require r >= k >= 1, got r=" + std::to_string(r) +
                      ", k=" + std::to_string(k));
  }
  const double top = r + k + 2;
  return {r * (f(r + 2) - f(top)) + k * (f(k + 2) - f(top)),
          g(r + 2) + g(k + 2) - 2.0 * g(top) +
              2.0 * std::sqrt(r + 2.0) * std::sqrt(k + 2.0) / (r + k + 4.0)};
}

BoundInterval bound_interval(int n) {
  if (n < 3) throw DomainError("bounds require n >= 3, got " + std::to_string(n));
  return {ga_sn3_closed(n), static_cast<double>(n)};
}

namespace proof_constants {

double b_q1_lower() { return 2.0 * g(3) - f(5); }

double a_diagonal_lower(int q) {
  const double x = q;
  return x * (x + 1) * (x + 1) / ((x + 2) * (x + 2) * std::sqrt(2 * x + 3));
}

double c_diagonal_lower(int k) {
  const double x = k;
  return 2 * x * x * (2 * x + 1) / ((2 * x + 3) * (2 * x + 3) * std::sqrt(2 * x + 2));
}

double d_k1_lower() { return 2.0 * std::sqrt(6.0) / 5.0; }

}  // namespace proof_constants

std::optional<FamilySpec> recognize_family(const Graph& g) {
  if (!is_unicyclic(g)) return std::nullopt;
  if (is_cycle_graph(g)) return FamilySpec::cycle(g.order());
  const CycleStructure cycle = find_cycle(g);
  std::vector<std::pair<int, Vertex>> loaded;  // (position, vertex) of cycle vertices with pendants
  for (int i = 0; i < cycle.girth(); ++i) {
    const Vertex c = cycle.vertices[i];
    const PendantTree tree = pendant_tree(g, cycle, c);
    if (!tree.is_star()) return std::nullopt;
    if (tree.edge_count() > 0) loaded.push_back({i, c});
  }
  auto pendants = [&](Vertex c) { return g.degree(c) - 2; };
  if (cycle.girth() == 3) {
    if (loaded.size() == 1) return FamilySpec::sn3(g.order());
    if (loaded.size() == 2) return FamilySpec::srk3(pendants(loaded[0].second), pendants(loaded[1].second));
    return std::nullopt;
  }
  if (cycle.girth() == 4) {
    if (loaded.size() == 1) return FamilySpec::spq4(pendants(loaded[0].second), 0);
    if (loaded.size() == 2 && loaded[1].first - loaded[0].first == 2) {
      return FamilySpec::spq4(pendants(loaded[0].second), pendants(loaded[1].second));
    }
  }
  return std::nullopt;
}

}  // namespace gaidx
