#include "spectra/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spectra/bounds.hpp"

namespace spectra {
namespace {

constexpr double kLinkSlack = 1e-8;

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::vector<char> membership(std::size_t n, std::span<const Vertex> set) {
  std::vector<char> in(n, 0);
  for (Vertex u : set) {
    if (u < n) in[u] = 1;
  }
  return in;
}

Graph remove_edges(const Graph& g, const std::vector<char>& removed) {
  std::vector<Edge> kept;
  kept.reserve(g.m());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!removed[i]) kept.push_back(edges[i]);
  }
  return Graph::from_edges(g.n(), kept);
}

// Mutable E0 selection state over the edge indices of g.
class EdgeSelection {
 public:
  EdgeSelection(const Graph& g, std::int64_t d, std::vector<char> in_c)
      : g_(g), d_(d), in_c_(std::move(in_c)), in_e0_(g.m(), 0), dh_(g.n()) {
    for (Vertex u = 0; u < g.n(); ++u) dh_[u] = static_cast<std::int64_t>(g.degree(u));
  }

  bool greedy_pass() {
    bool changed = false;
    const auto edges = g_.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (in_e0_[i] || !in_c_[e.u] || !in_c_[e.v]) continue;
      if (dh_[e.u] >= d_ + 1 && dh_[e.v] >= d_ + 1) {
        in_e0_[i] = 1;
        --dh_[e.u];
        --dh_[e.v];
        changed = true;
      }
    }
    return changed;
  }

  // One pass of the swap (E0 - {vw}) + {uv} for uv in H, d_H(u) >= d+2,
  // v, w in C' with vw in E0. Each swap lowers the surplus by one.
  bool exchange_sweep() {
    bool changed = false;
    for (Vertex u = 0; u < g_.n(); ++u) {
      if (!in_c_[u]) continue;
      for (Vertex v : g_.neighbors(u)) {
        if (dh_[u] < d_ + 2) break;
        const std::size_t uv = g_.edge_index(u, v);
        if (in_e0_[uv] || !in_c_[v] || dh_[v] != d_) continue;
        for (Vertex w : g_.neighbors(v)) {
          const std::size_t vw = g_.edge_index(v, w);
          if (!in_e0_[vw] || !in_c_[w] || dh_[w] != d_) continue;
          in_e0_[vw] = 0;
          in_e0_[uv] = 1;
          --dh_[u];
          ++dh_[w];
          ++swaps_;
          changed = true;
          break;
        }
      }
    }
    return changed;
  }

  const std::vector<char>& in_e0() const { return in_e0_; }
  const std::vector<std::int64_t>& dh() const { return dh_; }
  std::size_t swaps() const { return swaps_; }

 private:
  const Graph& g_;
  std::int64_t d_;
  std::vector<char> in_c_;
  std::vector<char> in_e0_;
  std::vector<std::int64_t> dh_;
  std::size_t swaps_ = 0;
};

}  // namespace

Decomposition build_decomposition(const Graph& g) {
  Decomposition dec;
  dec.d = ceil_average_degree(g);
  const std::int64_t d = dec.d;
  const std::size_t n = g.n();

  std::vector<char> in_c(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    if (static_cast<std::int64_t>(g.degree(u)) >= d + 1) {
      in_c[u] = 1;
      dec.c.push_back(u);
    }
  }

  EdgeSelection selection(g, d, in_c);
  bool changed = selection.greedy_pass();
  while (true) {
    changed = selection.exchange_sweep();
    changed = selection.greedy_pass() || changed;
    if (!changed) break;
  }
  dec.exchange_swaps = selection.swaps();
  const auto& in_e0 = selection.in_e0();
  const auto& dh = selection.dh();

  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (in_e0[i]) dec.e0.push_back(edges[i]);
  }
  dec.h = remove_edges(g, in_e0);

  std::vector<char> in_c_prime(n, 0);
  for (Vertex u : dec.c) {
    if (dh[u] == d) {
      in_c_prime[u] = 1;
      dec.c_prime.push_back(u);
    }
  }
  std::vector<char> paired(n, 0);
  for (const Edge& e : dec.e0) {
    if (in_c_prime[e.u] && in_c_prime[e.v]) paired[e.u] = paired[e.v] = 1;
  }
  std::vector<char> in_a(n, 0);
  for (Vertex u : dec.c) {
    if (in_c_prime[u] && !paired[u]) {
      dec.c_double_prime.push_back(u);
    } else {
      in_a[u] = 1;
    }
  }
  for (Vertex u = 0; u < n; ++u) (in_a[u] ? dec.a : dec.b).push_back(u);

  for (const Edge& e : dec.e0) (in_a[e.u] && in_a[e.v] ? dec.e_a : dec.e_ab).push_back(e);
  for (Vertex u : dec.c) {
    std::int64_t surplus = dh[u] - (d + 1);
    for (Vertex v : g.neighbors(u)) {
      if (surplus <= 0) break;
      if (in_e0[g.edge_index(u, v)]) continue;
      dec.e_ab.push_back(u < v ? Edge{u, v} : Edge{v, u});
      --surplus;
    }
  }
  std::sort(dec.e_ab.begin(), dec.e_ab.end());
  dec.m_a = dec.e_a.size();
  dec.m_ab = dec.e_ab.size();

  std::vector<char> removed(g.m(), 0);
  std::vector<Edge> split_edges;
  for (const auto* list : {&dec.e_a, &dec.e_ab}) {
    for (const Edge& e : *list) {
      removed[g.edge_index(e.u, e.v)] = 1;
      split_edges.push_back(e);
    }
  }
  dec.g_prime = remove_edges(g, removed);
  dec.g_double_prime = Graph::from_edges(n, split_edges);
  return dec;
}

std::vector<CheckResult> verify_decomposition(const Graph& g, const Decomposition& dec) {
  const std::size_t n = g.n();
  if (dec.h.n() != n || dec.g_prime.n() != n || dec.g_double_prime.n() != n) {
    throw std::invalid_argument("verify_decomposition: decomposition built for a graph of order " +
                                std::to_string(dec.h.n()) + ", checked against order " +
                                std::to_string(n));
  }
  std::vector<CheckResult> out;
  auto record = [&out](std::string name, std::string witness) {
    out.push_back({std::move(name), witness.empty(), std::move(witness)});
  };
  auto list_mismatch = [](const std::vector<Vertex>& got, const std::vector<Vertex>& want) {
    if (got == want) return std::string();
    for (std::size_t i = 0; i < std::max(got.size(), want.size()); ++i) {
      if (i >= got.size()) return "missing vertex " + std::to_string(want[i]);
      if (i >= want.size() || got[i] != want[i]) return "unexpected vertex " + std::to_string(got[i]);
    }
    return std::string("mismatch");
  };

  const std::int64_t d = ceil_average_degree(g);
  record("d_value", dec.d == d ? "" : "stored d=" + std::to_string(dec.d) + ", expected " + std::to_string(d));

  std::vector<Vertex> c;
  for (Vertex u = 0; u < n; ++u) {
    if (static_cast<std::int64_t>(g.degree(u)) >= d + 1) c.push_back(u);
  }
  record("c_set", list_mismatch(dec.c, c));
  const auto in_c = membership(n, c);

  // E0 from raw data: edges of g, inside C, no repeats.
  std::vector<char> in_e0(g.m(), 0);
  {
    std::string witness;
    for (const Edge& e : dec.e0) {
      const std::size_t idx = e.u < n && e.v < n ? g.edge_index(e.u, e.v) : g.m();
      if (idx == g.m()) {
        witness = edge_text(e) + " is not an edge of G";
      } else if (!in_c[e.u] || !in_c[e.v]) {
        witness = edge_text(e) + " leaves C";
      } else if (in_e0[idx]) {
        witness = edge_text(e) + " listed twice";
      }
      if (!witness.empty()) break;
      in_e0[idx] = 1;
    }
    record("e0_inside_c", witness);
  }
  std::vector<std::int64_t> dh(n);
  for (Vertex u = 0; u < n; ++u) dh[u] = static_cast<std::int64_t>(g.degree(u));
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (in_e0[i]) {
      --dh[edges[i].u];
      --dh[edges[i].v];
    }
  }
  const Graph h = remove_edges(g, in_e0);
  record("h_matches", h == dec.h ? "" : "H differs from G - E0");

  {
    std::string witness;
    for (Vertex u : c) {
      if (dh[u] < d) {
        witness = "vertex " + std::to_string(u) + " has d_H=" + std::to_string(dh[u]);
        break;
      }
    }
    record("c_keeps_degree_d", witness);
  }
  {
    std::string witness;
    for (std::size_t i = 0; i < edges.size() && witness.empty(); ++i) {
      const Edge& e = edges[i];
      if (!in_e0[i] && in_c[e.u] && in_c[e.v] && dh[e.u] >= d + 1 && dh[e.v] >= d + 1) {
        witness = edge_text(e) + " can still be added to E0";
      }
    }
    record("e0_maximal", witness);
  }
  {
    std::string witness;
    for (Vertex u : c) {
      if (dh[u] < d + 2) continue;
      for (Vertex v : g.neighbors(u)) {
        if (in_e0[g.edge_index(u, v)] || !in_c[v] || dh[v] != d) continue;
        for (Vertex w : g.neighbors(v)) {
          if (in_e0[g.edge_index(v, w)] && in_c[w] && dh[w] == d) {
            witness = "swap " + edge_text({v < w ? v : w, v < w ? w : v}) + " for " +
                      edge_text({u < v ? u : v, u < v ? v : u});
            break;
          }
        }
        if (!witness.empty()) break;
      }
      if (!witness.empty()) break;
    }
    record("exchange_stable", witness);
  }

  std::vector<Vertex> c_prime;
  for (Vertex u : c) {
    if (dh[u] == d) c_prime.push_back(u);
  }
  record("c_prime_set", list_mismatch(dec.c_prime, c_prime));
  const auto in_c_prime = membership(n, c_prime);
  std::vector<char> paired(n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (in_e0[i] && in_c_prime[edges[i].u] && in_c_prime[edges[i].v]) {
      paired[edges[i].u] = paired[edges[i].v] = 1;
    }
  }
  std::vector<Vertex> c_double_prime;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  for (Vertex u : c_prime) {
    if (!paired[u]) c_double_prime.push_back(u);
  }
  record("c_double_prime_set", list_mismatch(dec.c_double_prime, c_double_prime));
  const auto in_cpp = membership(n, c_double_prime);
  for (Vertex u = 0; u < n; ++u) (in_c[u] && !in_cpp[u] ? a : b).push_back(u);
  {
    std::string witness = list_mismatch(dec.a, a);
    if (witness.empty()) witness = list_mismatch(dec.b, b);
    record("a_b_partition", witness);
  }
  const auto in_a = membership(n, a);

  {
    std::string witness;
    for (const Edge& e : h.edges()) {
      if (in_c[e.u] && in_c[e.v] && dh[e.u] >= d + 1 && dh[e.v] >= d + 1) {
        witness = "H-edge " + edge_text(e) + " joins two vertices with d_H >= d+1";
        break;
      }
    }
    record("high_set_independent", witness);
  }
  {
    std::string witness;
    for (Vertex u : c) {
      if (dh[u] < d + 2) continue;
      for (Vertex v : h.neighbors(u)) {
        if (in_a[v]) {
          witness = "vertex " + std::to_string(u) + " has H-neighbor " + std::to_string(v) + " in A";
          break;
        }
      }
      if (!witness.empty()) break;
    }
    record("surplus_neighbors_in_b", witness);
  }

  {
    std::string witness;
    for (const Edge& e : dec.e_a) {
      if (e.u >= n || e.v >= n || !in_a[e.u] || !in_a[e.v]) {
        witness = edge_text(e);
        break;
      }
    }
    if (witness.empty()) {
      std::vector<Edge> expected;
      for (std::size_t i = 0; i < edges.size(); ++i) {
        if (in_e0[i] && in_a[edges[i].u] && in_a[edges[i].v]) expected.push_back(edges[i]);
      }
      if (expected != dec.e_a) witness = "E_A differs from E0 restricted to A";
    }
    record("e_a_inside_a", witness);
  }
  {
    std::string witness;
    for (const Edge& e : dec.e_ab) {
      if (e.u >= n || e.v >= n || in_a[e.u] == in_a[e.v]) {
        witness = edge_text(e);
        break;
      }
    }
    record("e_ab_crosses", witness);
  }
  {
    // E_AB = (E0 \ E_A) + surplus H-edges, d_H(u) - (d+1) of them at each
    // u with d_H(u) >= d+2.
    std::string witness;
    std::vector<char> in_e_ab(g.m(), 0);
    std::vector<std::int64_t> surplus_taken(n, 0);
    for (const Edge& e : dec.e_ab) {
      const std::size_t idx = e.u < n && e.v < n ? g.edge_index(e.u, e.v) : g.m();
      if (idx == g.m() || in_e_ab[idx]) {
        witness = edge_text(e) + " is not a distinct edge of G";
        break;
      }
      in_e_ab[idx] = 1;
      if (in_e0[idx]) continue;
      const Vertex high = in_c[e.u] && dh[e.u] >= d + 2 ? e.u : e.v;
      if (!in_c[high] || dh[high] < d + 2) {
        witness = "surplus edge " + edge_text(e) + " has no endpoint with d_H >= d+2";
        break;
      }
      ++surplus_taken[high];
    }
    for (std::size_t i = 0; i < edges.size() && witness.empty(); ++i) {
      if (in_e0[i] && !(in_a[edges[i].u] && in_a[edges[i].v]) && !in_e_ab[i]) {
        witness = "E0 edge " + edge_text(edges[i]) + " missing from E_AB";
      }
    }
    for (Vertex u : c) {
      if (!witness.empty()) break;
      const std::int64_t want = std::max<std::int64_t>(dh[u] - (d + 1), 0);
      if (surplus_taken[u] != want) {
        witness = "vertex " + std::to_string(u) + " contributes " + std::to_string(surplus_taken[u]) +
                  " surplus edges, expected " + std::to_string(want);
      }
    }
    record("e_ab_composition", witness);
  }
  record("edge_counts", dec.m_a == dec.e_a.size() && dec.m_ab == dec.e_ab.size()
                            ? ""
                            : "stored m_A=" + std::to_string(dec.m_a) + ", m_AB=" + std::to_string(dec.m_ab));

  std::vector<char> in_split(g.m(), 0);
  std::vector<Edge> split_edges;
  bool split_valid = true;
  for (const auto* list : {&dec.e_a, &dec.e_ab}) {
    for (const Edge& e : *list) {
      const std::size_t idx = e.u < n && e.v < n ? g.edge_index(e.u, e.v) : g.m();
      if (idx == g.m()) {
        split_valid = false;
        continue;
      }
      in_split[idx] = 1;
      split_edges.push_back(e);
    }
  }
  const Graph g_prime = remove_edges(g, in_split);
  record("g_prime_matches", split_valid && g_prime == dec.g_prime ? "" : "G' differs from G - (E_A + E_AB)");
  {
    std::string witness;
    for (Vertex u = 0; u < n; ++u) {
      if (static_cast<std::int64_t>(dec.g_prime.degree(u)) > d + 1) {
        witness = "vertex " + std::to_string(u) + " has degree " + std::to_string(dec.g_prime.degree(u));
        break;
      }
    }
    record("g_prime_max_degree", witness);
  }
  {
    std::string witness;
    for (Vertex u : a) {
      if (static_cast<std::int64_t>(dec.g_prime.degree(u)) < d) {
        witness = "vertex " + std::to_string(u) + " has degree " + std::to_string(dec.g_prime.degree(u));
        break;
      }
    }
    record("g_prime_min_degree_on_a", witness);
  }
  {
    std::string witness;
    if (dec.g_prime.m() + dec.g_double_prime.m() != g.m()) {
      witness = "|E(G')| + |E(G'')| = " + std::to_string(dec.g_prime.m() + dec.g_double_prime.m()) +
                " != m = " + std::to_string(g.m());
    }
    for (const Edge& e : dec.g_double_prime.edges()) {
      if (!witness.empty()) break;
      if (dec.g_prime.has_edge(e.u, e.v)) witness = "edge " + edge_text(e) + " in both parts";
      else if (!g.has_edge(e.u, e.v)) witness = "edge " + edge_text(e) + " not in G";
    }
    for (const Edge& e : g.edges()) {
      if (!witness.empty()) break;
      if (!dec.g_prime.has_edge(e.u, e.v) && !dec.g_double_prime.has_edge(e.u, e.v)) {
        witness = "edge " + edge_text(e) + " in neither part";
      }
    }
    record("edge_partition", witness);
  }
  {
    const EdgeSplit split = partition_edge_counts(dec.g_double_prime, a);
    record("g_double_prime_admissible",
           split.m_b == 0 ? "" : std::to_string(split.m_b) + " edges of G'' inside B");
  }
  {
    // 2m_A + m_AB <= sum_A (d_G - d) <= sum_C (d_G - d) <= sum_C (d_G - 2m/n) <= s/2,
    // every link in integers (the last two scaled by n).
    const auto nn = static_cast<std::int64_t>(n);
    const auto twice_m = 2 * static_cast<std::int64_t>(g.m());
    const auto removed_endpoints = 2 * static_cast<std::int64_t>(dec.e_a.size()) +
                                   static_cast<std::int64_t>(dec.e_ab.size());
    std::int64_t excess_a = 0;
    std::int64_t excess_c = 0;
    std::int64_t scaled_excess_c = 0;
    for (Vertex u : c) {
      const auto deg = static_cast<std::int64_t>(g.degree(u));
      excess_c += deg - d;
      scaled_excess_c += nn * deg - twice_m;
      if (in_a[u]) excess_a += deg - d;
    }
    const std::int64_t scaled_s = scaled_degree_deviation(g);
    std::string witness;
    if (removed_endpoints > excess_a) {
      witness = "2m_A+m_AB=" + std::to_string(removed_endpoints) + " > sum_A(d_G-d)=" + std::to_string(excess_a);
    } else if (excess_a > excess_c) {
      witness = "sum_A(d_G-d)=" + std::to_string(excess_a) + " > sum_C(d_G-d)=" + std::to_string(excess_c);
    } else if (nn * excess_c > scaled_excess_c) {
      witness = "sum_C(d_G-d) exceeds sum_C(d_G-2m/n)";
    } else if (2 * scaled_excess_c > scaled_s) {
      witness = "sum_C(d_G-2m/n) exceeds s/2";
    } else if (2 * nn * removed_endpoints > scaled_s) {
      witness = "2m_A+m_AB exceeds s/2";
    }
    record("removed_edge_budget", witness);
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Certificate theorem1_certificate(const Graph& g, const Decomposition& dec, const SpectralResult& r) {
  Certificate cert;
  cert.d = dec.d;
  cert.m_a = dec.m_a;
  cert.m_ab = dec.m_ab;
  cert.lambda = r.lambda;
  const double base = static_cast<double>(dec.d + 1);
  cert.bound_10 = base + mixed_bound(dec.m_a, dec.m_ab);
  cert.slack = cert.bound_10 - r.lambda;
  cert.deviation_cap = base + std::sqrt(2.0 * degree_deviation(g) / 3.0);
  cert.holds = cert.slack >= -kLinkSlack && cert.bound_10 <= cert.deviation_cap + kLinkSlack;
  return cert;
}

Certificate theorem1_certificate(const Graph& g, const SpectralResult& r) {
  return theorem1_certificate(g, build_decomposition(g), r);
}

ChainReport certificate_chain(const Graph& g, const Decomposition& dec, const SpectralResult& r,
                              const SpectralOptions& options) {
  ChainReport chain;
  chain.lambda = r.lambda;
  const SpectralResult first = spectral_radius(dec.g_prime, options);
  const SpectralResult second = spectral_radius(dec.g_double_prime, options);
  chain.converged = r.converged && first.converged && second.converged;
  chain.lambda_g_prime = first.lambda;
  chain.lambda_g_double_prime = second.lambda;
  chain.link_sum = first.lambda + second.lambda;
  const double base = static_cast<double>(dec.d + 1);
  chain.link_mixed = base + mixed_bound(dec.m_a, dec.m_ab);
  chain.link_deviation = base + std::sqrt(2.0 * degree_deviation(g) / 3.0);
  chain.subadditive = chain.lambda <= chain.link_sum + kLinkSlack;
  chain.degree_and_mixed = chain.link_sum <= chain.link_mixed + kLinkSlack;
  chain.deviation = chain.link_mixed <= chain.link_deviation + kLinkSlack;
  return chain;
}

}  // namespace spectra
