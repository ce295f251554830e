#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wle/graph.hpp"

namespace wle {

namespace {

// Splits on single spaces; anything else (tabs, repeated spaces, signs) is
// malformed.
bool parse_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  const auto space = line.find(' ');
  if (space == std::string_view::npos) return false;
  auto parse = [](std::string_view s, std::uint64_t& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
  };
  return parse(line.substr(0, space), a) && parse(line.substr(space + 1), b);
}

}  // namespace

Graph read_edge_list(const std::string& text) {
  std::vector<std::string_view> lines;
  std::string_view rest(text);
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    lines.push_back(rest.substr(0, nl));
    if (nl == std::string_view::npos) break;
    rest.remove_prefix(nl + 1);
  }
  std::uint64_t n = 0, m = 0;
  if (lines.empty() || !parse_pair(lines[0], n, m) || n == 0) {
    throw GraphError(GraphError::Kind::MalformedHeader,
                     "line 1: expected header \"n m\" with n >= 1");
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty() || lines[i] == "\r") continue;
    std::uint64_t a = 0, b = 0;
    if (!parse_pair(lines[i], a, b)) {
      throw GraphError(GraphError::Kind::MalformedEdge,
                       "line " + std::to_string(i + 1) +
                           ": expected edge \"u v\"");
    }
    if (a >= n || b >= n) {
      throw GraphError(GraphError::Kind::VertexOutOfRange,
                       "line " + std::to_string(i + 1) + ": vertex index " +
                           std::to_string(a >= n ? a : b) +
                           " out of range for n = " + std::to_string(n));
    }
    if (a == b) {
      throw GraphError(GraphError::Kind::SelfLoop,
                       "line " + std::to_string(i + 1) + ": self-loop at " +
                           std::to_string(a));
    }
    const Edge e{static_cast<Vertex>(std::min(a, b)),
                 static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(e).second) {
      throw GraphError(GraphError::Kind::DuplicateEdge,
                       "line " + std::to_string(i + 1) + ": duplicate edge " +
                           std::to_string(e.u) + " " + std::to_string(e.v));
    }
    edges.push_back(e);
  }
  if (edges.size() != m) {
    throw GraphError(GraphError::Kind::EdgeCountMismatch,
                     "header declares " + std::to_string(m) +
                         " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace wle
