#include "spectra/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace spectra {

Graph::Graph(std::size_t n, std::vector<Edge> sorted_unique_edges)
    : edges_(std::move(sorted_unique_edges)), adjacency_(n) {
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::from_edge_list(std::size_t n,
                            std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (u >= n || v >= n) {
      throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(u) +
                       "," + std::to_string(v) + "): vertex index out of range for n=" +
                       std::to_string(n));
    }
    if (u == v) {
      throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(u) +
                       "," + std::to_string(v) + "): self-loop");
    }
    edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges));
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return from_edge_list(n, pairs);
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n());
  for (std::size_t u = 0; u < n(); ++u) out[u] = adjacency_[u].size();
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n() || v >= n()) return false;
  return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::size_t Graph::edge_index(Vertex u, Vertex v) const {
  const Edge key = u < v ? Edge{u, v} : Edge{v, u};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

EdgeSplit partition_edge_counts(const Graph& g, std::span<const Vertex> a) {
  std::vector<char> in_a(g.n(), 0);
  for (Vertex u : a) {
    if (u >= g.n()) {
      throw GraphError("vertex " + std::to_string(u) + " not in graph of order " +
                       std::to_string(g.n()));
    }
    in_a[u] = 1;
  }
  EdgeSplit split;
  for (Vertex u = 0; u < g.n(); ++u) (in_a[u] ? split.a : split.b).push_back(u);
  for (const Edge& e : g.edges()) {
    const int inside = in_a[e.u] + in_a[e.v];
    if (inside == 2) {
      ++split.m_a;
    } else if (inside == 1) {
      ++split.m_ab;
    } else {
      ++split.m_b;
    }
  }
  return split;
}

bool is_triangle_free(const Graph& g) {
  for (const Edge& e : g.edges()) {
    auto nu = g.neighbors(e.u);
    auto nv = g.neighbors(e.v);
    auto i = nu.begin();
    auto j = nv.begin();
    while (i != nu.end() && j != nv.end()) {
      if (*i == *j) return false;
      if (*i < *j) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n(), -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop();
      for (Vertex v : g.neighbors(u)) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push(v);
        } else if (color[v] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_regular(const Graph& g) {
  if (g.n() == 0) return true;
  const std::size_t d0 = g.degree(0);
  for (Vertex u = 1; u < g.n(); ++u) {
    if (g.degree(u) != d0) return false;
  }
  return true;
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw GraphError("edge list: missing header line \"n m\"");
  long long n = -1;
  long long m = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || n < 0 || m < 0 || (header >> extra)) {
      throw GraphError("edge list line " + std::to_string(line_no) +
                       ": expected header \"n m\"");
    }
  }
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line()) {
      throw GraphError("edge list: expected " + std::to_string(m) + " edges, found " +
                       std::to_string(i));
    }
    std::istringstream row(line);
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) {
      throw GraphError("edge list line " + std::to_string(line_no) +
                       ": expected \"u v\"");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge list line " + std::to_string(line_no) +
                       ": vertex index out of range for n=" + std::to_string(n));
    }
    pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_line()) {
    throw GraphError("edge list line " + std::to_string(line_no) +
                     ": more edges than declared in header");
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), pairs);
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace spectra
