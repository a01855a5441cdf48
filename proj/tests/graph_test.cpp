#include <gtest/gtest.h>

#include <sstream>

#include "boxcode/graph.hpp"
#include "oracles.hpp"

using namespace boxcode;

namespace {

oracle::Adjacency adjacency(const Graph& g) {
  oracle::Adjacency a(g.size(), std::vector<bool>(g.size(), false));
  for (const auto& [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

}  // namespace

TEST(Graph, Generators) {
  EXPECT_EQ(complete_graph(5).edge_count(), 10u);
  EXPECT_EQ(cycle_graph(5).edge_count(), 5u);
  EXPECT_EQ(path_graph(4).edge_count(), 3u);
  EXPECT_EQ(star_graph(4).size(), 5u);
  EXPECT_EQ(star_graph(4).degree(0), 4u);
  EXPECT_EQ(edgeless_graph(3).edge_count(), 0u);
  EXPECT_EQ(erdos_renyi(10, 0.5, 1).edges(), erdos_renyi(10, 0.5, 1).edges());
}

TEST(Graph, SelfLoopsAndRangeAreRejected) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  EXPECT_THROW(Graph(65), std::length_error);
}

TEST(Graph, IsolatedVerticesAreStripped) {
  Graph g(5);
  g.add_edge(1, 3);
  const Graph h = g.without_isolated();
  EXPECT_EQ(h.size(), 2u);
  EXPECT_EQ(h.edge_count(), 1u);
}

TEST(Independence, KnownValues) {
  EXPECT_EQ(independence_number(cycle_graph(5)), 2u);
  EXPECT_EQ(independence_number(complete_graph(6)), 1u);
  EXPECT_EQ(independence_number(edgeless_graph(4)), 4u);
  EXPECT_EQ(independence_number(star_graph(5)), 5u);
  EXPECT_EQ(independence_number_including(star_graph(5), 0), 1u);
  EXPECT_EQ(independence_number_including(cycle_graph(5), 2), 2u);
}

TEST(Independence, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const std::size_t m = 2 + seed % 11;
    const Graph g = erdos_renyi(m, 0.15 + 0.1 * static_cast<double>(seed % 7), seed);
    const auto a = adjacency(g);
    ASSERT_EQ(independence_number(g), oracle::alpha(a)) << seed;
    for (std::size_t u = 0; u < m; ++u)
      ASSERT_EQ(independence_number_including(g, u), oracle::alpha(a, static_cast<int>(u))) << seed << " " << u;
    // Gallai: α + vertex cover = M
    ASSERT_EQ(independence_number(g) + oracle::vertex_cover(a), m);
  }
}

TEST(Chromatic, KnownValues) {
  EXPECT_EQ(chromatic_number(cycle_graph(5)).colors, 3u);
  EXPECT_EQ(chromatic_number(cycle_graph(6)).colors, 2u);
  EXPECT_EQ(chromatic_number(complete_graph(7)).colors, 7u);
  EXPECT_EQ(chromatic_number(edgeless_graph(3)).colors, 1u);
  EXPECT_EQ(chromatic_number(Graph(0)).colors, 0u);
}

TEST(Chromatic, MatchesAssignmentSearchAndColouringIsProper) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t m = 2 + seed % 7;
    const Graph g = erdos_renyi(m, 0.5, 100 + seed);
    const Coloring c = chromatic_number(g);
    ASSERT_EQ(c.colors, oracle::chromatic(adjacency(g))) << seed;
    for (const auto& [u, v] : g.edges()) ASSERT_NE(c.color[u], c.color[v]);
    for (const auto x : c.color) ASSERT_LT(x, c.colors);
  }
}

TEST(Turan, EdgeLowerBound) {
  // M²/(2α) − M/2 at M = 5, α = 2
  EXPECT_EQ(turan_edge_lower(5, 2), Rational(15, 4));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = erdos_renyi(9, 0.4, seed);
    EXPECT_GE(Rational(static_cast<std::int64_t>(g.edge_count())), turan_edge_lower(g)) << seed;
  }
}

TEST(EdgeList, RoundTripAndErrors) {
  std::stringstream s;
  write_edge_list(s, cycle_graph(5));
  const Graph g = read_edge_list(s);
  EXPECT_EQ(g.edges(), cycle_graph(5).edges());

  std::istringstream bad("3\n1 2\n2 4\n");
  try {
    read_edge_list(bad);
    FAIL() << "expected an error";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  std::istringstream comments("# a path\n3\n1 2 # first\n\n2 3\n");
  EXPECT_EQ(read_edge_list(comments).edge_count(), 2u);
}
