#include "spectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace spectra {
namespace {

// Deterministic symmetry breaker for the start vector.
constexpr double kStartPerturbation = 1e-9;

// After the residual first reaches tol, iteration continues until it is below
// tol / (lambda + max degree), which bounds the two-step residual
// |((A + lambda I)(Ax - lambda x))_u| by tol as well. Polishing stops early
// once the residual has not improved for this many iterations (rounding floor).
constexpr std::size_t kPolishPatience = 64;

void multiply(const Graph& g, const std::vector<double>& x, std::vector<double>& y) {
  for (Vertex u = 0; u < g.n(); ++u) {
    double acc = 0.0;
    for (Vertex v : g.neighbors(u)) acc += x[v];
    y[u] = acc;
  }
}

void scale_to_unit_max(std::vector<double>& x) {
  const double top = *std::max_element(x.begin(), x.end());
  for (double& value : x) value /= top;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, const SpectralOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("spectral_radius: tol must be > 0");
  if (options.max_iter < 1) throw std::invalid_argument("spectral_radius: max_iter must be >= 1");

  const std::size_t n = g.n();
  SpectralResult result;
  if (g.m() == 0) {
    result.vector.assign(n, 1.0);
    return result;
  }

  std::vector<double> x(n);
  for (std::size_t u = 0; u < n; ++u) x[u] = 1.0 + static_cast<double>(u) * kStartPerturbation;
  scale_to_unit_max(x);
  std::vector<double> ax(n);

  result.residual = std::numeric_limits<double>::infinity();
  result.converged = false;
  double target = options.tol;
  std::size_t since_best = 0;
  for (std::size_t iter = 1; iter <= options.max_iter; ++iter) {
    multiply(g, x, ax);
    const double xax = std::inner_product(x.begin(), x.end(), ax.begin(), 0.0);
    const double xx = std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
    const double lambda = xax / xx;
    double residual = 0.0;
    for (std::size_t u = 0; u < n; ++u) residual = std::max(residual, std::abs(ax[u] - lambda * x[u]));

    if (residual < result.residual) {
      result.lambda = lambda;
      result.vector = x;
      result.residual = residual;
      since_best = 0;
    } else {
      ++since_best;
    }
    result.iterations = iter;
    if (!result.converged && residual <= options.tol) {
      result.converged = true;
      target = options.tol / std::max(1.0, lambda + static_cast<double>(g.max_degree()));
    }
    if (result.converged && (residual <= target || since_best >= kPolishPatience)) break;
    for (std::size_t u = 0; u < n; ++u) x[u] += ax[u];
    scale_to_unit_max(x);
  }
  return result;
}

std::vector<double> dense_eigenvalues(const Graph& g) {
  const std::size_t n = g.n();
  if (n > kDenseOracleMaxOrder) {
    throw std::invalid_argument("dense_eigen_oracle: n=" + std::to_string(n) +
                                " exceeds the dense limit of " +
                                std::to_string(kDenseOracleMaxOrder));
  }
  std::vector<double> a(n * n, 0.0);
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (const Edge& e : g.edges()) {
    at(e.u, e.v) = 1.0;
    at(e.v, e.u) = 1.0;
  }

  const double frobenius_sq = 2.0 * static_cast<double>(g.m());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
    }
    if (off <= 1e-30 * frobenius_sq || off == 0.0) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = 0.0;
        at(q, p) = 0.0;
      }
    }
  }

  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = at(i, i);
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

double dense_eigen_oracle(const Graph& g) {
  const auto eigenvalues = dense_eigenvalues(g);
  return eigenvalues.empty() ? 0.0 : eigenvalues.back();
}

double two_step_residual(const Graph& g, const SpectralResult& r) {
  if (r.vector.size() != g.n()) {
    throw std::invalid_argument("two_step_residual: vector has " + std::to_string(r.vector.size()) +
                                " entries for a graph of order " + std::to_string(g.n()));
  }
  const auto& x = r.vector;
  const double lambda_sq = r.lambda * r.lambda;
  double worst = 0.0;
  for (Vertex u = 0; u < g.n(); ++u) {
    double walk = 0.0;
    for (Vertex v : g.neighbors(u)) {
      for (Vertex w : g.neighbors(v)) {
        if (w != u) walk += x[w];
      }
    }
    const double lhs = lambda_sq * x[u];
    const double rhs = x[u] * static_cast<double>(g.degree(u)) + walk;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

}  // namespace spectra
