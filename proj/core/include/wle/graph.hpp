#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace wle {

using Vertex = std::uint32_t;
using Distance = std::int32_t;

/// Sentinel distance for vertex pairs in different components.
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

/// Undirected edge with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind {
    MalformedHeader,
    MalformedEdge,
    EdgeCountMismatch,
    VertexOutOfRange,
    SelfLoop,
    DuplicateEdge,
  };

  GraphError(Kind kind, const std::string& what)
      : std::invalid_argument(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n = 0);

  /// Validates every edge: endpoints in range, no self-loops, no duplicates
  /// (in either orientation). Edges may be given in any order.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_.at(v);
  }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  /// All edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;  // each list sorted
  std::size_t edge_count_ = 0;
};

/// G(n,p) sample. Pairs are visited in lexicographic order (0,1),(0,2),...
/// and pair {i,j} is kept iff the next PortableRng uniform is below p.
/// Throws std::invalid_argument for n == 0 or p outside [0,1].
Graph generate_gnp(std::size_t n, double p, std::uint64_t seed);

/// Dense all-pairs hop distances, kUnreachable across components.
class DistanceTable {
 public:
  DistanceTable() = default;
  DistanceTable(std::size_t n, std::vector<Distance> flat);

  std::size_t order() const noexcept { return n_; }
  Distance at(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }
  bool reachable(std::size_t i, std::size_t j) const {
    return at(i, j) != kUnreachable;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Distance> dist_;
};

/// One BFS per source vertex; O(n (n + m)).
DistanceTable bfs_all_pairs(const Graph& g);

struct GraphStats {
  std::vector<std::size_t> degrees;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  /// std::nullopt when the graph is disconnected.
  std::optional<Distance> diameter;
  bool connected = false;
};

GraphStats graph_stats(const Graph& g, const DistanceTable& d);

/// Edge-list interchange format: "n m" header line, then m lines "u v".
/// write_edge_list emits u < v in lexicographic order with LF endings.
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

}  // namespace wle
