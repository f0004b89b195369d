#include "spectra/generators.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <vector>

namespace spectra {

Graph complete_split(std::size_t q, std::size_t n) {
  if (q > n) {
    throw GraphError("complete split graph requires q <= n (q=" + std::to_string(q) +
                     ", n=" + std::to_string(n) + ")");
  }
  std::vector<Edge> edges;
  edges.reserve(q * (q - (q > 0 ? 1 : 0)) / 2 + q * (n - q));
  for (Vertex u = 0; u < q; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(n, edges);
}

Graph blow_up(const Graph& g, std::size_t t) {
  if (t == 0) throw GraphError("blow-up factor t must be at least 1");
  std::vector<Edge> edges;
  edges.reserve(g.m() * t * t);
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) {
        edges.push_back({static_cast<Vertex>(e.u * t + i), static_cast<Vertex>(e.v * t + j)});
      }
    }
  }
  return Graph::from_edges(g.n() * t, edges);
}

Graph random_gnm(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t total = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  if (m > total) {
    throw GraphError("random_gnm: m=" + std::to_string(m) + " exceeds C(n,2)=" +
                     std::to_string(total));
  }
  std::mt19937_64 rng(seed);
  // Floyd's algorithm: a uniform m-subset of [0, total).
  std::unordered_set<std::uint64_t> chosen;
  chosen.reserve(m * 2);
  for (std::uint64_t j = total - m; j < total; ++j) {
    std::uniform_int_distribution<std::uint64_t> pick(0, j);
    const std::uint64_t r = pick(rng);
    if (!chosen.insert(r).second) chosen.insert(j);
  }
  std::vector<std::uint64_t> indices(chosen.begin(), chosen.end());
  std::sort(indices.begin(), indices.end());

  // Index k enumerates pairs row-major: (0,1), (0,2), ..., (0,n-1), (1,2), ...
  std::vector<Edge> edges;
  edges.reserve(m);
  Vertex u = 0;
  std::uint64_t row_start = 0;
  for (std::uint64_t k : indices) {
    while (k >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    edges.push_back({u, static_cast<Vertex>(u + 1 + (k - row_start))});
  }
  return Graph::from_edges(n, edges);
}

std::uint64_t labeled_count(std::size_t n) {
  if (n > kMaxEnumerationOrder) {
    throw GraphError("exhaustive enumeration limited to n <= 8 (n=" + std::to_string(n) +
                     " would need 2^" + std::to_string(n * (n - 1) / 2) + " graphs)");
  }
  return std::uint64_t{1} << (n * (n - (n > 0 ? 1 : 0)) / 2);
}

Graph labeled_graph(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex u = 0; u + 1 < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if ((mask >> bit) & 1) edges.push_back({u, v});
    }
  }
  return Graph::from_edges(n, edges);
}

LabeledGraphs::LabeledGraphs(std::size_t n) : n_(n), count_(labeled_count(n)) {}

LabeledGraphs enumerate_labeled(std::size_t n) { return LabeledGraphs(n); }

}  // namespace spectra
