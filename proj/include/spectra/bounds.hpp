#ifndef SPECTRA_BOUNDS_HPP
#define SPECTRA_BOUNDS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>

#include "spectra/graph.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

/// s(G) = sum_u |d(u) - 2m/n|. Throws for n = 0.
double degree_deviation(const Graph& g);

/// n * s(G) as an exact integer: sum_u |n d(u) - 2m|.
std::int64_t scaled_degree_deviation(const Graph& g);

/// ceil(2m / n). Throws for n = 0.
std::int64_t ceil_average_degree(const Graph& g);

double stanley_bound(std::size_t m);

/// Spectral radius bound for a graph whose edges are m_a edges inside A and
/// m_ab edges between A and B:
///   sqrt(m_a + m_ab + sqrt(m_a^2 + 2 m_a m_ab)).
double mixed_bound(std::size_t m_a, std::size_t m_ab);

/// The alpha in [0,1] at which 2 m_a + (1 + alpha) m_ab and
/// (2 / alpha) m_a + m_ab coincide. Throws for m_ab = 0.
double alpha_star(std::size_t m_a, std::size_t m_ab);

/// Signed difference of the two sides of the alpha balancing equation.
double alpha_balance_residual(std::size_t m_a, std::size_t m_ab, double alpha);

struct BoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  double d_avg = 0.0;
  double s = 0.0;
  double lambda = 0.0;
  double gap = 0.0;  ///< lambda - 2m/n
  double stanley = 0.0;
  std::optional<double> bipartite_bound;  ///< sqrt(m), only for bipartite graphs
  std::optional<double> nosal;            ///< sqrt(m), only for triangle-free graphs
  double nikiforov = 0.0;                 ///< sqrt(s)
  double zhang = 0.0;                     ///< sqrt(9s/10)
  double thm1 = 0.0;                      ///< sqrt(2s/3)
  double conjecture = 0.0;                ///< sqrt(s/2)
  std::optional<double> ratio;            ///< gap^2 / s, absent when s = 0
  bool gap_anomaly = false;               ///< gap below -1e-12
};

/// Assembles the full bound ladder for g from a spectral result computed on g.
BoundReport deviation_bounds(const Graph& g, const SpectralResult& r);

/// Closed-form spectral radius of CS(q, n), requires 1 <= q <= n:
///   (q - 1 + sqrt((4n - 2) q - 3 q^2 + 1)) / 2.
double split_graph_lambda(std::size_t q, std::size_t n);

/// The same expression with a cubic q term in the radicand. Kept only so the
/// two candidate forms can be compared against the dense oracle; returns NaN
/// where the radicand is negative.
double split_graph_lambda_cubic(std::size_t q, std::size_t n);

struct Maximizer {
  double x_star = 0.0;
  double value = 0.0;
};

/// Maximizes f(x) = sqrt(s/2 - x + sqrt(x (s - 3x))) over [0, s/4] by
/// golden-section search (200 iterations). The maximizer is s/12 with value
/// sqrt(2s/3). Throws for s < 0.
Maximizer e11_maximize(double s);

}  // namespace spectra

#endif  // SPECTRA_BOUNDS_HPP
