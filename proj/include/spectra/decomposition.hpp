#ifndef SPECTRA_DECOMPOSITION_HPP
#define SPECTRA_DECOMPOSITION_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

/// Splits G into a near-regular part G' (max degree <= d+1) and a part G''
/// whose edges either lie inside A or join A to B, so the mixed bound
/// applies to G''.
///
///   d   = ceil(2m/n)
///   C   = {u : d_G(u) >= d+1}
///   E0  = edges inside C removed while keeping d_H(u) >= d on C, H = G - E0
///   C'  = {u in C : d_H(u) = d}
///   C'' = vertices of C' with no E0 edge to another vertex of C'
///   A   = C \ C'',  B = V \ A
///   E_A = E0 edges inside A
///   E_AB = (E0 \ E_A) plus, for each u in C with d_H(u) >= d+2, the
///          d_H(u) - (d+1) lowest-indexed H-edges at u
///   G'  = G - (E_A u E_AB),  G'' = (V, E_A u E_AB)
///
/// All vertex lists are sorted ascending, all edge lists lexicographically.
struct Decomposition {
  std::int64_t d = 0;
  std::vector<Vertex> c;
  std::vector<Edge> e0;
  Graph h;
  std::vector<Vertex> c_prime;
  std::vector<Vertex> c_double_prime;
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  std::vector<Edge> e_a;
  std::vector<Edge> e_ab;
  std::size_t m_a = 0;
  std::size_t m_ab = 0;
  Graph g_prime;
  Graph g_double_prime;
  std::size_t exchange_swaps = 0;
};

/// Chooses E0 greedily (lexicographic candidate order), then alternates
/// exchange sweeps with re-greedy passes until neither changes anything.
/// The result is inclusion-maximal and stable under the swap
/// (E0 - {vw}) + {uv}, which is what the structural claims need.
/// Throws for n = 0.
Decomposition build_decomposition(const Graph& g);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  ///< empty when passed
};

/// Re-derives every structural claim about `dec` from g and the stored edge
/// sets, without trusting cached counts or derived sets. Throws
/// std::invalid_argument when dec was built for a graph of a different order.
std::vector<CheckResult> verify_decomposition(const Graph& g, const Decomposition& dec);

bool all_passed(const std::vector<CheckResult>& checks);

struct Certificate {
  std::int64_t d = 0;
  std::size_t m_a = 0;
  std::size_t m_ab = 0;
  double lambda = 0.0;
  double bound_10 = 0.0;       ///< d + 1 + mixed_bound(m_a, m_ab)
  double slack = 0.0;          ///< bound_10 - lambda
  double deviation_cap = 0.0;  ///< d + 1 + sqrt(2s/3)
  bool holds = true;           ///< slack >= -1e-8 and bound_10 <= deviation_cap + 1e-8
};

Certificate theorem1_certificate(const Graph& g, const SpectralResult& r);
Certificate theorem1_certificate(const Graph& g, const Decomposition& dec, const SpectralResult& r);

/// lambda(G) <= lambda(G') + lambda(G'') <= (d+1) + mixed <= (d+1) + sqrt(2s/3),
/// each link checked with 1e-8 slack.
struct ChainReport {
  double lambda = 0.0;
  double lambda_g_prime = 0.0;
  double lambda_g_double_prime = 0.0;
  double link_sum = 0.0;       ///< lambda(G') + lambda(G'')
  double link_mixed = 0.0;     ///< (d+1) + mixed_bound
  double link_deviation = 0.0; ///< (d+1) + sqrt(2s/3)
  bool subadditive = true;
  bool degree_and_mixed = true;
  bool deviation = true;
  bool converged = true;

  bool holds() const { return subadditive && degree_and_mixed && deviation && converged; }
};

ChainReport certificate_chain(const Graph& g, const Decomposition& dec, const SpectralResult& r,
                              const SpectralOptions& options = {});

}  // namespace spectra

#endif  // SPECTRA_DECOMPOSITION_HPP
