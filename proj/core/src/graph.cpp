#include "wle/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

#include "wle/rng.hpp"

namespace wle {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw GraphError(GraphError::Kind::VertexOutOfRange,
                       "vertex index out of range in edge (" +
                           std::to_string(e.u) + ", " + std::to_string(e.v) +
                           ") for n = " + std::to_string(n));
    }
    if (e.u == e.v) {
      throw GraphError(GraphError::Kind::SelfLoop,
                       "self-loop at vertex " + std::to_string(e.u));
    }
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw GraphError(GraphError::Kind::DuplicateEdge,
                       "duplicate edge (" + std::to_string(v) + ", " +
                           std::to_string(*dup) + ")");
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  const auto& list = adjacency_.at(a);
  return std::binary_search(list.begin(), list.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph generate_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("generate_gnp: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("generate_gnp: p must lie in [0, 1]");
  }
  PortableRng rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(
      std::ceil(p * static_cast<double>(n) * static_cast<double>(n - 1) / 2)));
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (rng.uniform() < p) edges.push_back({i, j});
    }
  }
  return Graph::from_edges(n, edges);
}

DistanceTable::DistanceTable(std::size_t n, std::vector<Distance> flat)
    : n_(n), dist_(std::move(flat)) {
  if (dist_.size() != n_ * n_) {
    throw std::invalid_argument("DistanceTable: expected n*n entries");
  }
}

DistanceTable bfs_all_pairs(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Distance> flat(n * n, kUnreachable);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    Distance* row = flat.data() + static_cast<std::size_t>(s) * n;
    row[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex w : g.neighbors(u)) {
        if (row[w] == kUnreachable) {
          row[w] = row[u] + 1;
          queue[tail++] = w;
        }
      }
    }
  }
  return DistanceTable(n, std::move(flat));
}

GraphStats graph_stats(const Graph& g, const DistanceTable& d) {
  const std::size_t n = g.order();
  GraphStats s;
  s.degrees.resize(n);
  for (Vertex v = 0; v < n; ++v) s.degrees[v] = g.degree(v);
  if (n > 0) {
    auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
    s.min_degree = *lo;
    s.max_degree = *hi;
  }
  Distance diam = 0;
  bool connected = true;
  for (std::size_t i = 0; i < n && connected; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Distance dij = d.at(i, j);
      if (dij == kUnreachable) {
        connected = false;
        break;
      }
      diam = std::max(diam, dij);
    }
  }
  s.connected = connected;
  if (connected) s.diameter = diam;
  return s;
}

}  // namespace wle
