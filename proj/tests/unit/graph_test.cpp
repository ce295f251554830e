#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "wle/graph.hpp"
#include "wle/rng.hpp"

namespace wle {
namespace {

Graph path3() {
  const std::array<Edge, 2> e{{{0, 1}, {1, 2}}};
  return Graph::from_edges(3, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<Vertex>(i), b = static_cast<Vertex>((i + 1) % n);
    e.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph::from_edges(n, e);
}

// Floyd-Warshall on the adjacency relation, independent of the BFS code.
std::vector<std::vector<long>> floyd(const Graph& g) {
  const std::size_t n = g.order();
  const long inf = 1L << 40;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (Vertex j : g.neighbors(static_cast<Vertex>(i))) d[i][j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

TEST(Gnp, ZeroProbabilityGivesEmptyGraph) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    const Graph g = generate_gnp(5, 0.0, seed);
    EXPECT_EQ(g.order(), 5u);
    EXPECT_EQ(g.size(), 0u);
  }
}

TEST(Gnp, UnitProbabilityGivesCompleteGraph) {
  const Graph g = generate_gnp(5, 1.0, 123);
  EXPECT_EQ(g.size(), 10u);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(g.degree(v), 4u);
}

TEST(Gnp, EdgeCountWithinFourSigma) {
  const Graph g = generate_gnp(200, 0.5, 7);
  const double m = static_cast<double>(g.size());
  EXPECT_LE(std::abs(m - 9950.0), 4.0 * std::sqrt(19900 * 0.25));
}

TEST(Gnp, MatchesDirectPairStream) {
  // Oracle: replay the documented pair order with the same engine.
  const std::size_t n = 30;
  const double p = 0.37;
  const Graph g = generate_gnp(n, p, 2024);
  PortableRng rng(2024);
  std::size_t count = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const bool keep = rng.uniform() < p;
      EXPECT_EQ(g.has_edge(i, j), keep) << i << "," << j;
      count += keep;
    }
  }
  EXPECT_EQ(g.size(), count);
}

TEST(Gnp, DeterministicAcrossCalls) {
  EXPECT_EQ(generate_gnp(100, 0.5, 7), generate_gnp(100, 0.5, 7));
  EXPECT_NE(generate_gnp(100, 0.5, 7), generate_gnp(100, 0.5, 8));
}

TEST(Gnp, RejectsBadArguments) {
  EXPECT_THROW(generate_gnp(5, -0.1, 0), std::invalid_argument);
  EXPECT_THROW(generate_gnp(5, 1.1, 0), std::invalid_argument);
  EXPECT_THROW(generate_gnp(5, std::nan(""), 0), std::invalid_argument);
  EXPECT_THROW(generate_gnp(0, 0.5, 0), std::invalid_argument);
}

TEST(Gnp, DegreeSumIsTwiceEdgeCountAndAdjacencySymmetric) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = generate_gnp(60, 0.3, seed);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      sum += g.degree(v);
      for (Vertex u : g.neighbors(v)) EXPECT_TRUE(g.has_edge(u, v));
    }
    EXPECT_EQ(sum, 2 * g.size());
  }
}

TEST(Bfs, CompleteGraphHasUnitDistances) {
  const DistanceTable d = bfs_all_pairs(generate_gnp(3, 1.0, 0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(d.at(i, j), i == j ? 0 : 1);
}

TEST(Bfs, PathEndpointsAtDistanceTwo) {
  EXPECT_EQ(bfs_all_pairs(path3()).at(0, 2), 2);
}

TEST(Bfs, FiveCycleSecondNeighbours) {
  const Graph c5 = cycle(5);
  const DistanceTable d = bfs_all_pairs(c5);
  const auto oracle = floyd(c5);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(d.at(i, (i + 2) % 5), 2);
    for (std::size_t j = 0; j < 5; ++j) EXPECT_EQ(d.at(i, j), oracle[i][j]);
  }
}

TEST(Bfs, AgreesWithFloydWarshallOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Graph g = generate_gnp(25, 0.12, seed);
    const DistanceTable d = bfs_all_pairs(g);
    const auto oracle = floyd(g);
    for (std::size_t i = 0; i < 25; ++i) {
      for (std::size_t j = 0; j < 25; ++j) {
        if (oracle[i][j] >= (1L << 40)) {
          EXPECT_FALSE(d.reachable(i, j));
          EXPECT_EQ(d.at(i, j), kUnreachable);
        } else {
          EXPECT_EQ(d.at(i, j), oracle[i][j]);
        }
        EXPECT_EQ(d.at(i, j), d.at(j, i));
        EXPECT_EQ(d.at(i, j) == 1, g.has_edge(static_cast<Vertex>(i),
                                               static_cast<Vertex>(j)));
      }
    }
  }
}

TEST(Stats, CompleteGraphK4) {
  const Graph g = generate_gnp(4, 1.0, 0);
  const GraphStats s = graph_stats(g, bfs_all_pairs(g));
  EXPECT_EQ(s.min_degree, 3u);
  EXPECT_EQ(s.max_degree, 3u);
  ASSERT_TRUE(s.diameter.has_value());
  EXPECT_EQ(*s.diameter, 1);
  EXPECT_TRUE(s.connected);
}

TEST(Stats, PathDegreesAndDiameter) {
  const Graph g = path3();
  const GraphStats s = graph_stats(g, bfs_all_pairs(g));
  EXPECT_EQ(s.degrees, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(s.diameter, 2);
}

TEST(Stats, TwoDisjointEdgesAreDisconnected) {
  const std::array<Edge, 2> e{{{0, 1}, {2, 3}}};
  const Graph g = Graph::from_edges(4, e);
  const GraphStats s = graph_stats(g, bfs_all_pairs(g));
  EXPECT_FALSE(s.connected);
  EXPECT_FALSE(s.diameter.has_value());
}

TEST(Stats, DegreeWindowAndDiameterTwoOverBatch) {
  // 20 seeds at n = 200 for each p; batch failure rate must stay under 5%.
  // Smaller p leaves pairs without a common neighbour at this n.
  for (double p : {0.5, 0.8}) {
    std::size_t failures = 0;
    const double n = 200;
    const double half = std::pow(n, 0.75);
    for (std::uint64_t t = 0; t < 20; ++t) {
      const Graph g = generate_gnp(200, p, stable_mix(11, 0, t));
      const GraphStats s = graph_stats(g, bfs_all_pairs(g));
      const bool ok = static_cast<double>(s.min_degree) > n * p - half &&
                      static_cast<double>(s.max_degree) < n * p + half &&
                      s.diameter == 2;
      failures += !ok;
    }
    EXPECT_LE(failures, 1u) << "p=" << p;
  }
}

TEST(EdgeList, ReadsPath) {
  EXPECT_EQ(read_edge_list("3 2\n0 1\n1 2\n"), path3());
}

TEST(EdgeList, WritesSortedEdges) {
  EXPECT_EQ(write_edge_list(generate_gnp(3, 1.0, 0)), "3 3\n0 1\n0 2\n1 2\n");
}

TEST(EdgeList, WriteNormalizesOrientationAndOrder) {
  const std::array<Edge, 3> e{{{2, 3}, {0, 3}, {1, 2}}};
  EXPECT_EQ(write_edge_list(Graph::from_edges(4, e)), "4 3\n0 3\n1 2\n2 3\n");
  EXPECT_EQ(write_edge_list(read_edge_list("3 1\n2 0\n")), "3 1\n0 2\n");
}

TEST(EdgeList, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = generate_gnp(40, 0.3, seed);
    EXPECT_EQ(read_edge_list(write_edge_list(g)), g);
  }
  EXPECT_EQ(read_edge_list(write_edge_list(Graph(5))), Graph(5));
}

GraphError::Kind kind_of(const std::string& text) {
  try {
    read_edge_list(text);
  } catch (const GraphError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for: " << text;
  return GraphError::Kind::MalformedHeader;
}

TEST(EdgeList, DistinctErrors) {
  using K = GraphError::Kind;
  EXPECT_EQ(kind_of("2 1\n0 0\n"), K::SelfLoop);
  EXPECT_EQ(kind_of("3 2\n0 1\n1 0\n"), K::DuplicateEdge);
  EXPECT_EQ(kind_of("3 1\n0 3\n"), K::VertexOutOfRange);
  EXPECT_EQ(kind_of("x 1\n0 1\n"), K::MalformedHeader);
  EXPECT_EQ(kind_of(""), K::MalformedHeader);
  EXPECT_EQ(kind_of("3\n"), K::MalformedHeader);
  EXPECT_EQ(kind_of("3 1\n0\n"), K::MalformedEdge);
  EXPECT_EQ(kind_of("3 1\n0 -1\n"), K::MalformedEdge);
  EXPECT_EQ(kind_of("3 2\n0 1\n"), K::EdgeCountMismatch);
  EXPECT_EQ(kind_of("3 1\n0 1\n1 2\n"), K::EdgeCountMismatch);
}

TEST(EdgeList, ErrorMentionsLineNumber) {
  try {
    read_edge_list("4 2\n0 1\n2 2\n");
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
}

TEST(FromEdges, RejectsInvalidEdges) {
  const std::array<Edge, 1> loop{{{1, 1}}};
  EXPECT_THROW(Graph::from_edges(3, loop), GraphError);
  const std::array<Edge, 1> out{{{0, 5}}};
  EXPECT_THROW(Graph::from_edges(3, out), GraphError);
  const std::array<Edge, 2> dup{{{0, 1}, {1, 0}}};
  EXPECT_THROW(Graph::from_edges(3, dup), GraphError);
}

TEST(Rng, StableMixIsDeterministicAndSpreads) {
  EXPECT_EQ(stable_mix(1, 2, 3), stable_mix(1, 2, 3));
  EXPECT_NE(stable_mix(1, 2, 3), stable_mix(1, 3, 2));
  EXPECT_NE(stable_mix(1, 0, 0), stable_mix(2, 0, 0));
  // SplitMix64 reference value for input 0.
  EXPECT_EQ(mix64(0x9e3779b97f4a7c15ULL), 0xe220a8397b1dcdafULL);
}

TEST(Rng, UniformInUnitInterval) {
  PortableRng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

}  // namespace
}  // namespace wle
