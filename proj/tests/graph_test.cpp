#include <gtest/gtest.h>

#include <sstream>

#include "gaidx/error.hpp"
#include "gaidx/families.hpp"
#include "gaidx/graph.hpp"
#include "gaidx/graph_io.hpp"
#include "gaidx/unicyclic.hpp"
#include "support.hpp"

namespace gaidx {
namespace {

TEST(Graph, BuildNormalizesAndSorts) {
  const Graph g = Graph::build(4, {{3, 2}, {1, 0}, {2, 1}});
  ASSERT_EQ(g.size(), 3);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[2], (Edge{2, 3}));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_TRUE(g.has_edge(3, 2));
  EXPECT_FALSE(g.has_edge(0, 3));
}

TEST(Graph, RejectsSelfLoop) {
  try {
    Graph::build(3, {{0, 1}, {2, 2}});
    FAIL() << "expected GraphError";
  } catch (const GraphError& e) {
    ASSERT_TRUE(e.pair().has_value());
    EXPECT_EQ(*e.pair(), (Edge{2, 2}));
  }
}

TEST(Graph, RejectsDuplicateReportingCallerPair) {
  try {
    Graph::build(3, {{0, 1}, {1, 0}});
    FAIL() << "expected GraphError";
  } catch (const GraphError& e) {
    ASSERT_TRUE(e.pair().has_value());
    EXPECT_EQ(*e.pair(), (Edge{1, 0}));
  }
}

TEST(Graph, RejectsOutOfRangeAndEmpty) {
  EXPECT_THROW(Graph::build(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph::build(3, {{-1, 0}}), GraphError);
  EXPECT_THROW(Graph::build(0, {}), GraphError);
}

TEST(Graph, RelabelPreservesStructure) {
  const Graph g = test::paw();
  const std::vector<Vertex> perm = {3, 2, 1, 0};
  const Graph h = relabel(g, perm);
  EXPECT_EQ(h.size(), 4);
  EXPECT_TRUE(h.has_edge(1, 0));  // 2-3 renamed
  EXPECT_EQ(h.degree(1), 3);
}

TEST(Unicyclic, RecognizesBasicCases) {
  EXPECT_TRUE(is_unicyclic(test::paw()));
  EXPECT_TRUE(is_unicyclic(Graph::cycle(7)));
  EXPECT_FALSE(is_unicyclic(Graph::build(4, {{0, 1}, {1, 2}, {2, 3}})));
  // Two disjoint triangles: |E| = |V| but disconnected.
  const Graph twins = Graph::build(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(is_connected(twins));
  EXPECT_FALSE(is_unicyclic(twins));
  EXPECT_THROW(find_cycle(twins), NotUnicyclicError);
}

TEST(Unicyclic, FindCycleOfPaw) {
  const CycleStructure c = find_cycle(test::paw());
  EXPECT_EQ(c.vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(c.girth(), 3);
  EXPECT_FALSE(c.contains(3));
  EXPECT_EQ(c.position(3), -1);
}

TEST(Unicyclic, FindCycleOfSpq4) {
  const Graph g = make_family(FamilySpec::spq4(2, 3));
  const CycleStructure c = find_cycle(g);
  EXPECT_EQ(c.girth(), 4);
  EXPECT_EQ(c.vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_TRUE(c.adjacent_on_cycle(3, 0));
  EXPECT_FALSE(c.adjacent_on_cycle(0, 2));
  EXPECT_EQ(c.cycle_neighbors(0), (std::pair<Vertex, Vertex>{1, 3}));
  EXPECT_EQ(c.edges().size(), 4u);
}

TEST(Unicyclic, CycleOrderIsLabelIndependent) {
  const Graph g = Graph::build(5, {{4, 2}, {2, 3}, {3, 4}, {3, 0}, {0, 1}});
  const CycleStructure c = find_cycle(g);
  EXPECT_EQ(c.vertices, (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(c.step_from(2, +1), 3);
  EXPECT_EQ(c.step_from(2, -1), 4);
}

TEST(Unicyclic, PendantTree) {
  const Graph g = test::triangle_with_path();
  const PendantTree t = pendant_tree(g, 2);
  EXPECT_EQ(t.root, 2);
  EXPECT_EQ(t.vertices, (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(t.edge_count(), 2);
  EXPECT_FALSE(t.is_star());
  EXPECT_TRUE(pendant_tree(g, 0).is_star());
  EXPECT_EQ(pendant_tree(g, 0).edge_count(), 0);
  EXPECT_THROW(pendant_tree(g, 3), VertexError);
}

TEST(Unicyclic, ClassifyLocalExtremes) {
  const Graph g = test::relocate_witness();
  EXPECT_TRUE(classify_cycle_vertex(g, 0).local_max);
  EXPECT_FALSE(classify_cycle_vertex(g, 0).local_min);
  EXPECT_TRUE(classify_cycle_vertex(g, 1).local_min);
  EXPECT_TRUE(classify_cycle_vertex(g, 1).local_max == false);
  // Equal degrees count as both.
  const auto both = classify_cycle_vertex(Graph::cycle(5), 3);
  EXPECT_TRUE(both.local_max && both.local_min);
  const CycleStructure c = find_cycle(g);
  EXPECT_EQ(max_degree_cycle_vertex(g, c), 0);
  EXPECT_EQ(min_degree_cycle_vertex(g, c), 1);
  EXPECT_TRUE(is_cycle_graph(Graph::cycle(4)));
  EXPECT_FALSE(is_cycle_graph(test::paw()));
}

TEST(EdgeListIo, ParsesWithBlankLines) {
  const Graph g = parse_edge_list("4 4\n0 1\n\n1 2\n2 0\n2 3\n");
  EXPECT_EQ(g, test::paw());
}

TEST(EdgeListIo, ReportsLineNumbers) {
  try {
    parse_edge_list("2 1\n0 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_edge_list("3 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 0\n"), GraphError);
}

TEST(EdgeListIo, RoundTrip) {
  const Graph g = make_family(FamilySpec::srk3(4, 2));
  EXPECT_EQ(parse_edge_list(format_edge_list(g)), g);
  std::ostringstream out;
  write_edge_list(out, g);
  EXPECT_EQ(out.str(), format_edge_list(g));
}

TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(to_graph6(Graph::cycle(3)), "Bw");
  EXPECT_EQ(to_graph6(test::paw()), "Cx");
}

TEST(Graph6, RoundTripRandomUnicyclic) {
  std::mt19937 rng(7);
  for (int n = 3; n <= 40; ++n) {
    const Graph base = make_family(FamilySpec::srk3(n - 4 > 0 ? n - 4 : 1, 1));
    const Graph g = relabel(base, test::random_permutation(base.order(), rng));
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
  EXPECT_THROW(from_graph6(""), ParseError);
  EXPECT_THROW(from_graph6("C"), ParseError);
}

}  // namespace
}  // namespace gaidx
