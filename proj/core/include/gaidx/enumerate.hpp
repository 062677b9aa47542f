#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "gaidx/canonical.hpp"
#include "gaidx/graph.hpp"

namespace gaidx {

inline constexpr int kMinEnumerationOrder = 3;
inline constexpr int kMaxEnumerationOrder = 12;

/// One isomorphism class, represented by a concrete graph.
struct UnicyclicClass {
  CanonicalKey key;
  Graph graph;
};

/// Every connected unicyclic graph on n vertices up to isomorphism, sorted
/// by canonical key. Built girth by girth: a cycle C_g carrying one rooted
/// tree per cycle vertex, sequences that are not the least rotation or
/// reflection of themselves skipped, canonical keys deduplicating the rest.
/// Throws DomainError unless 3 <= n <= 12.
std::vector<UnicyclicClass> enumerate_unicyclic(int n);

/// Visits the same classes in the same order.
void for_each_unicyclic(int n, const std::function<void(const UnicyclicClass&)>& visit);

/// Number of unlabeled rooted trees with m vertices from the generator
/// backing enumerate_unicyclic.
std::size_t rooted_tree_count(int m);

}  // namespace gaidx
