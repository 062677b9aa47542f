#include <gtest/gtest.h>

#include <set>

#include "gaidx/canonical.hpp"
#include "gaidx/families.hpp"
#include "gaidx/graph.hpp"
#include "support.hpp"

namespace gaidx {
namespace {

std::vector<Graph> samples() {
  return {test::paw(),
          test::triangle_with_path(),
          test::relocate_witness(),
          Graph::cycle(9),
          make_family(FamilySpec::sn3(11)),
          make_family(FamilySpec::spq4(3, 3)),
          make_family(FamilySpec::srk3(5, 2)),
          // C_4 with a path and a star hanging off opposite corners.
          Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}, {2, 7}, {2, 8},
                            {8, 9}})};
}

TEST(Canonical, InvariantUnderRandomRelabeling) {
  std::mt19937 rng(2024);
  for (const Graph& g : samples()) {
    const CanonicalKey key = canonical_form(g);
    for (int trial = 0; trial < 50; ++trial) {
      const Graph h = relabel(g, test::random_permutation(g.order(), rng));
      EXPECT_EQ(canonical_form(h), key);
      EXPECT_TRUE(are_isomorphic(g, h));
    }
  }
}

TEST(Canonical, DistinguishesNonIsomorphic) {
  const auto gs = samples();
  std::set<CanonicalKey> keys;
  for (const Graph& g : gs) keys.insert(canonical_form(g));
  EXPECT_EQ(keys.size(), gs.size());
  // Same degree sequence, different structure.
  const Graph a = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}});
  const Graph b = Graph::build(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {2, 5}});
  EXPECT_EQ(a.degrees().size(), b.degrees().size());
  EXPECT_NE(canonical_form(a), canonical_form(b));
  EXPECT_FALSE(are_isomorphic(a, b));
}

TEST(Canonical, LabelingIsAPermutationRealizingTheKey) {
  for (const Graph& g : samples()) {
    const CanonicalResult r = canonical_labeling(g);
    std::vector<Vertex> sorted = r.labeling;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < g.order(); ++i) ASSERT_EQ(sorted[i], i);
    const Graph relabeled = relabel(g, r.labeling);
    EXPECT_EQ(canonical_labeling(relabeled).key, r.key);
  }
}

TEST(Canonical, AgreesWithBacktrackingOracle) {
  std::mt19937 rng(11);
  const auto gs = samples();
  for (const Graph& a : gs) {
    for (const Graph& b : gs) {
      const Graph shuffled = relabel(b, test::random_permutation(b.order(), rng));
      EXPECT_EQ(are_isomorphic(a, shuffled),
                oracle::isomorphic(test::to_simple(a), test::to_simple(shuffled)));
    }
  }
}

TEST(Canonical, HexIsStable) {
  const CanonicalKey k = canonical_form(Graph::cycle(3));
  EXPECT_EQ(k.hex().size(), 2 * k.bytes().size());
  EXPECT_EQ(k.hex(), canonical_form(Graph::cycle(3)).hex());
}

}  // namespace
}  // namespace gaidx
