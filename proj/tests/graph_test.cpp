#include <gtest/gtest.h>

#include "kpvc/generators.hpp"
#include "kpvc/graph.hpp"

using namespace kpvc;

TEST(ParseEdgeList, PathOnThreeVertices) {
  const Graph g = parse_edge_list("3 2\n0 1\n1 2");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(2, 1));
  EXPECT_FALSE(g.has_edge(0, 2));
  g.check_invariants();
}

TEST(ParseEdgeList, FourCycleHasAllDegreesTwo) {
  const Graph g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0");
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(g.degree(v), 2u);
}

TEST(ParseEdgeList, DuplicateEdgesCollapse) {
  const Graph g = parse_edge_list("2 1\n0 1\n0 1");
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(parse_edge_list("2 1\n0 1\n1 0").size(), 1u);
}

TEST(ParseEdgeList, CommentsAndTrailingNewline) {
  const Graph g = parse_edge_list("# a comment\n3 1\n# another\n0 2\n");
  EXPECT_EQ(g.order(), 3u);
  EXPECT_TRUE(g.has_edge(0, 2));
}

TEST(ParseEdgeList, ErrorsNameTheLine) {
  try {
    parse_edge_list("3 2\n0 1\n1 7");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    parse_edge_list("3 1\n\n2 2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
  EXPECT_THROW(parse_edge_list(""), ParseError);
  EXPECT_THROW(parse_edge_list("3"), ParseError);
  EXPECT_THROW(parse_edge_list("3 x"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n0 1 2"), ParseError);
  EXPECT_THROW(parse_edge_list("3 1\n-1 2"), ParseError);
  EXPECT_THROW(parse_edge_list("3 2\n0 1"), ParseError);  // too few edge lines
}

TEST(SerializeEdgeList, CanonicalForms) {
  EXPECT_EQ(serialize_edge_list(parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0")),
            "4 4\n0 1\n0 3\n1 2\n2 3");
  EXPECT_EQ(serialize_edge_list(Graph(1)), "1 0");
  EXPECT_EQ(serialize_edge_list(Graph::from_edges(2, {{1, 0}})), "2 1\n0 1");
}

TEST(SerializeEdgeList, RoundTripOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = make_random_gnp(1 + seed % 17, 0.3, RandomSeed{seed});
    EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  }
}

TEST(DeleteVertices, OppositeCycleVerticesIsolateTheRest) {
  const Subgraph s = delete_vertices(make_cycle(4), {0, 2});
  EXPECT_EQ(s.graph.order(), 2u);
  EXPECT_EQ(s.graph.size(), 0u);
  EXPECT_EQ(s.original, (std::vector<Vertex>{1, 3}));
}

TEST(DeleteVertices, EmptySetIsIdentity) {
  const Graph g = make_h6();
  const Subgraph s = delete_vertices(g, {});
  EXPECT_EQ(s.graph, g);
}

TEST(DeleteVertices, RemovingPathCenter) {
  const Subgraph s = delete_vertices(make_path(3), {1});
  EXPECT_EQ(s.graph.order(), 2u);
  EXPECT_EQ(s.graph.size(), 0u);
}

TEST(DeleteVertices, InducedSubgraphProperty) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t n = 2 + seed % 12;
    const Graph g = make_random_gnp(n, 0.4, RandomSeed{seed});
    Rng rng(RandomSeed{seed + 1000});
    std::vector<Vertex> pick;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.chance(0.3)) pick.push_back(v);
    }
    const VertexSet s(pick);
    const Subgraph sub = delete_vertices(g, s);
    sub.graph.check_invariants();
    ASSERT_EQ(sub.graph.order(), n - s.size());
    ASSERT_TRUE(std::is_sorted(sub.original.begin(), sub.original.end()));
    for (Vertex a = 0; a < sub.graph.order(); ++a) {
      for (Vertex b = 0; b < sub.graph.order(); ++b) {
        EXPECT_EQ(sub.graph.has_edge(a, b), g.has_edge(sub.original[a], sub.original[b]));
      }
    }
    std::size_t surviving = 0;
    for (const Edge& e : g.edges()) surviving += (!s.contains(e.u) && !s.contains(e.v)) ? 1 : 0;
    EXPECT_EQ(sub.graph.size(), surviving);
  }
}

TEST(DeleteVertices, RejectsOutOfRangeSet) {
  EXPECT_THROW(delete_vertices(make_path(3), {5}), PreconditionError);
}

TEST(Graph, FromEdgesRejectsLoopsAndRange) {
  EXPECT_THROW(Graph::from_edges(3, {{1, 1}}), PreconditionError);
  EXPECT_THROW(Graph::from_edges(3, {{0, 3}}), PreconditionError);
}

TEST(Graph, ForestDetection) {
  EXPECT_TRUE(is_forest(make_path(6)));
  EXPECT_TRUE(is_forest(disjoint_union(make_star(3), make_path(2))));
  EXPECT_TRUE(is_forest(Graph(4)));
  EXPECT_FALSE(is_forest(make_cycle(3)));
}

TEST(VertexSet, NormalizesToSortedUnique) {
  const VertexSet s({3, 1, 3, 0});
  EXPECT_EQ(s.members(), (std::vector<Vertex>{0, 1, 3}));
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
}

TEST(VertexSet, ParsesWhitespaceSeparatedList) {
  EXPECT_EQ(parse_vertex_set("# cover\n2 0\n\n5\n"), VertexSet({0, 2, 5}));
  EXPECT_THROW(parse_vertex_set("1 a"), ParseError);
}
