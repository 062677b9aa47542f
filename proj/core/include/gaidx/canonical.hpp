#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gaidx/graph.hpp"

namespace gaidx {

/// Labeling-invariant isomorphism-class key. Byte 0 is the order, the rest
/// is the upper triangle of the adjacency matrix under the canonical
/// labeling, bit-packed row by row.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::string hex() const;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::string bytes_;
};

/// Canonical key together with the labeling that produced it:
/// `labeling[v]` is the canonical position of vertex v.
struct CanonicalResult {
  CanonicalKey key;
  std::vector<Vertex> labeling;
};

CanonicalResult canonical_labeling(const Graph& g);
CanonicalKey canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace gaidx
