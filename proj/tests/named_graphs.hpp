#ifndef SPECTRA_TESTS_NAMED_GRAPHS_HPP
#define SPECTRA_TESTS_NAMED_GRAPHS_HPP

#include <vector>

#include "spectra/graph.hpp"

namespace spectra::testing {

inline Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    const Vertex v = static_cast<Vertex>((u + 1) % n);
    edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  return Graph::from_edges(n, edges);
}

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1});
  return Graph::from_edges(n, edges);
}

/// K_{1,k} with center 0.
inline Graph star(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= k; ++v) edges.push_back({0, v});
  return Graph::from_edges(k + 1, edges);
}

inline Graph petersen() {
  const std::vector<Edge> edges = {{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                   {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
  return Graph::from_edges(10, edges);
}

}  // namespace spectra::testing

#endif  // SPECTRA_TESTS_NAMED_GRAPHS_HPP
