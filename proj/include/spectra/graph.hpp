#ifndef SPECTRA_GRAPH_HPP
#define SPECTRA_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Thrown for malformed graph input (bad vertex index, self-loop, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are kept sorted lexicographically and
/// every neighbor list is sorted ascending, so two graphs with the same edge
/// set compare equal and iterate identically.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from vertex pairs. Duplicate pairs (in either
  /// orientation) collapse to one edge. Throws GraphError naming the
  /// offending pair for out-of-range indices or self-loops.
  static Graph from_edge_list(std::size_t n,
                              std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const { return adjacency_.size(); }
  std::size_t m() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex u) const { return adjacency_[u]; }
  std::size_t degree(Vertex u) const { return adjacency_[u].size(); }
  std::vector<std::size_t> degrees() const;
  std::size_t max_degree() const;

  bool has_edge(Vertex u, Vertex v) const;

  /// Position of {u,v} in edges(), or m() if absent.
  std::size_t edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  Graph(std::size_t n, std::vector<Edge> sorted_unique_edges);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Vertex bipartition (A, B) with the edge counts inside A, across, and
/// inside B.
struct EdgeSplit {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::size_t m_a = 0;
  std::size_t m_ab = 0;
  std::size_t m_b = 0;

  /// The mixed bound applies only when B spans no edges.
  bool admissible() const { return m_b == 0; }
};

/// Counts edges by position relative to `a`. Vertices outside V(g) throw.
EdgeSplit partition_edge_counts(const Graph& g, std::span<const Vertex> a);

bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_regular(const Graph& g);

/// Edge-list text: first line "n m", then m lines "u v" (0-indexed).
Graph parse_edge_list(const std::string& text);
std::string format_edge_list(const Graph& g);

}  // namespace spectra

#endif  // SPECTRA_GRAPH_HPP
