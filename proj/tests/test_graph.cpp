#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "graph_gen.hpp"
#include "sigmaforge/errors.hpp"
#include "sigmaforge/graph.hpp"

using namespace sigmaforge;

TEST(Degree, Examples) {
  const Graph k3 = families::complete(3);
  for (Vertex v = 0; v < 3; ++v) EXPECT_EQ(degree(k3, v), 2);
  EXPECT_EQ(degree(Graph(1, {}), 0), 0);
  EXPECT_EQ(degree(families::star(4), 0), 4);
}

TEST(Degree, OutOfRangeIsInputError) {
  const Graph g = families::path(3);
  EXPECT_THROW(degree(g, 3), InputError);
  EXPECT_THROW(degree(g, -1), InputError);
}

TEST(Regular, Examples) {
  EXPECT_TRUE(is_k_regular(families::cycle(5), 2));
  EXPECT_FALSE(is_k_regular(families::path(3), 2));
  EXPECT_EQ(regular_degree(families::petersen()), 3);
  EXPECT_EQ(regular_degree(families::path(3)), -1);
  EXPECT_EQ(regular_degree(Graph(0, {})), 0);
}

TEST(Construction, RejectsBadEdges) {
  EXPECT_THROW(Graph(2, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(2, {{0, 2}}), InputError);
}

TEST(Construction, AdjacencyIsSymmetric) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Graph g = testkit::random_graph(9, 0.4, rng);
    for (Vertex u = 0; u < 9; ++u)
      for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(g.adjacent(u, v), g.adjacent(v, u));
  }
}

TEST(Construction, Handshake) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Graph g = testkit::random_graph(12, 0.3, rng);
    int total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
    EXPECT_EQ(total, 2 * g.edge_count());
  }
}

TEST(Text, ParsesTriangle) {
  const Graph g = parse_graph("3 3\n0 1\n1 2\n0 2");
  EXPECT_EQ(g, families::complete(3));
}

TEST(Text, SelfLoopNamesLine) {
  try {
    parse_graph("2 1\n0 0\n");
    FAIL() << "self-loop accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Text, MalformedInputsNameTheirLine) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"x 1\n0 1\n", 1},            // header
      {"3 2\n0 1\n0 1\n", 3},       // duplicate
      {"3 1\n0 3\n", 2},            // id out of range
      {"3 2\n0 1\n", 3},            // missing edge line
      {"3 1\n0 1 2\n", 2},          // extra token
  };
  for (const auto& [text, line] : cases) {
    try {
      parse_graph(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << text;
    }
  }
}

TEST(Text, CanonicalSerialization) {
  const Graph g = parse_graph("4 3\n3 2\n1 0\n2 0\n");
  EXPECT_EQ(serialize_graph(g), "4 3\n0 1\n0 2\n2 3\n");
}

TEST(Text, RoundTripPreservesRoles) {
  GraphBuilder b;
  const Vertex a = b.add_vertex("var:x1:pos:1");
  const Vertex c = b.add_vertex();
  const Vertex d = b.add_vertex("clause:c1:v1");
  b.add_edge(a, c);
  b.add_edge(c, d);
  const Graph g = b.build();
  const std::string text = serialize_graph(g);
  const Graph back = parse_graph(text);
  EXPECT_EQ(back, g);
  EXPECT_EQ(serialize_graph(back), text);
  EXPECT_EQ(back.role(0), "var:x1:pos:1");
  EXPECT_EQ(back.role(1), "");
}

TEST(Text, RoundTripRandom) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testkit::random_graph(1 + static_cast<int>(rng() % 15), 0.35, rng);
    EXPECT_EQ(parse_graph(serialize_graph(g)), g);
  }
}

TEST(Builder, AddGraphShiftsIds) {
  GraphBuilder b;
  b.add_vertex();
  const Vertex off = b.add_graph(families::path(3), "p:");
  EXPECT_EQ(off, 1);
  const Graph g = b.build();
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_TRUE(g.adjacent(2, 3));
  EXPECT_EQ(b.degree(2), 2);
}

TEST(Families, Sizes) {
  EXPECT_EQ(families::petersen().edge_count(), 15);
  EXPECT_EQ(families::complete_bipartite(3, 4).edge_count(), 12);
  EXPECT_EQ(families::cycle(6).edge_count(), 6);
  EXPECT_TRUE(is_connected(families::petersen()));
  EXPECT_FALSE(is_connected(Graph(2, {})));
}
