#ifndef SPECTRA_SPECTRAL_HPP
#define SPECTRA_SPECTRAL_HPP

#include <cstddef>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

struct SpectralOptions {
  double tol = 1e-10;              ///< max-norm bound on A x - lambda x
  std::size_t max_iter = 1000000;
};

/// Largest adjacency eigenvalue with its Perron vector.
///
/// `vector` is nonnegative with max entry exactly 1. `residual` is
/// ||A x - lambda x||_inf for the returned pair. When `converged` is false the
/// pair is the lowest-residual iterate seen, and residual > tol.
struct SpectralResult {
  double lambda = 0.0;
  std::vector<double> vector;
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = true;
};

/// Power iteration on A + I from a strictly positive, slightly perturbed
/// start. The shift removes the +-lambda tie on bipartite graphs; positivity
/// keeps the dominant component's Perron root on disconnected graphs.
/// lambda is the Rayleigh quotient of A at the current iterate.
SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options = {});

inline constexpr std::size_t kDenseOracleMaxOrder = 200;

/// Largest adjacency eigenvalue by cyclic Jacobi rotations on the dense
/// matrix. Shares no code with spectral_radius. Throws for n > 200.
double dense_eigen_oracle(const Graph& g);

/// All eigenvalues (ascending) from the same Jacobi sweep.
std::vector<double> dense_eigenvalues(const Graph& g);

/// max_u | lambda^2 x_u - x_u d(u) - sum_{v in N(u)} sum_{w in N(v)\{u}} x_w |,
/// the two-step form of the eigen-equation. Throws on a vector of the wrong
/// length.
double two_step_residual(const Graph& g, const SpectralResult& r);

}  // namespace spectra

#endif  // SPECTRA_SPECTRAL_HPP
