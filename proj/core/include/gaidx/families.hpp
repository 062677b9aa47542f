#pragma once

#include <optional>
#include <string>

#include "gaidx/graph.hpp"

namespace gaidx {

enum class Family { cycle, sn3, spq4, srk3 };

std::string to_string(Family f);
/// Inverse of to_string; throws DomainError on an unknown name.
Family family_from_string(const std::string& name);

/// One of the extremal unicyclic families:
///   cycle(n)     C_n
///   sn3(n)       n-3 pendants on one vertex of C_3
///   spq4(p, q)   p and q pendants on two opposite vertices of C_4
///   srk3(r, k)   r and k pendants on two vertices of C_3
/// Two-parameter specs are stored with the larger parameter first.
class FamilySpec {
 public:
  static FamilySpec cycle(int n);
  static FamilySpec sn3(int n);
  static FamilySpec spq4(int p, int q);
  static FamilySpec srk3(int r, int k);

  Family family() const noexcept { return family_; }
  /// n for cycle/sn3, p or r for the two-parameter families.
  int first() const noexcept { return first_; }
  /// q or k; 0 for the one-parameter families.
  int second() const noexcept { return second_; }
  int order() const noexcept;

  /// e.g. "S_{2,1;3}".
  std::string display_name() const;
  /// e.g. "srk3(2,1)".
  std::string key() const;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;

 private:
  FamilySpec(Family f, int a, int b) : family_(f), first_(a), second_(b) {}

  Family family_;
  int first_;
  int second_;
};

/// Cycle vertices get ids 0..girth-1 in ring order, then pendants follow,
/// grouped by attachment vertex (0 first, then 1 for srk3 or 2 for spq4).
Graph make_family(const FamilySpec& spec);

/// GA of S_{n;3}: 1 + (2n^2 + 4(sqrt2-1)n - 6) sqrt(n-1) / (n(n+1)).
double ga_sn3_closed(int n);
double ga_spq4_closed(int p, int q);
double ga_srk3_closed(int r, int k);
double ga_closed(const FamilySpec& spec);

/// Split of GA(S_{p,q;4}) - GA(S_{n;3}) + 1 into the pendant part A and the
/// cycle part B, n = p+q+4. Requires p >= q >= 0.
struct PendantCyclePair {
  double pendant = 0.0;
  double cycle = 0.0;
};
PendantCyclePair compare_AB(int p, int q);
/// Same split for GA(S_{r,k;3}) - GA(S_{n;3}) + 1 with n = r+k+3.
/// Requires r >= k >= 1.
PendantCyclePair compare_CD(int r, int k);

struct BoundInterval {
  double lower = 0.0;
  double upper = 0.0;
};
/// [GA(S_{n;3}), n], the range of GA over unicyclic graphs of order n.
BoundInterval bound_interval(int n);

/// Numeric anchors used when showing S_{n;3} is below the other families.
namespace proof_constants {
/// 2 g(3) - f(5), the lower bound on B(p, 1).
double b_q1_lower();
/// q (q+1)^2 / ((q+2)^2 sqrt(2q+3)), a lower bound on A(q, q).
double a_diagonal_lower(int q);
/// 2 k^2 (2k+1) / ((2k+3)^2 sqrt(2k+2)), a lower bound on C(k, k).
double c_diagonal_lower(int k);
/// 2 sqrt(6) / 5, the lower bound on D(r, 1).
double d_k1_lower();
}  // namespace proof_constants

/// Identifies g as a member of one of the families, if it is one. Prefers
/// the most specific name: a cycle, then sn3, then srk3 / spq4.
std::optional<FamilySpec> recognize_family(const Graph& g);

}  // namespace gaidx
