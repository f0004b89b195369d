#include "spectra/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace spectra {
namespace {

constexpr double kNegativeGapClamp = 1e-12;

void require_vertices(const Graph& g, const char* who) {
  if (g.n() == 0) {
    throw std::invalid_argument(std::string(who) + ": graph has no vertices (2m/n undefined)");
  }
}

}  // namespace

std::int64_t scaled_degree_deviation(const Graph& g) {
  require_vertices(g, "degree_deviation");
  const auto n = static_cast<std::int64_t>(g.n());
  const auto twice_m = 2 * static_cast<std::int64_t>(g.m());
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    const std::int64_t diff = n * static_cast<std::int64_t>(g.degree(u)) - twice_m;
    total += diff < 0 ? -diff : diff;
  }
  return total;
}

double degree_deviation(const Graph& g) {
  return static_cast<double>(scaled_degree_deviation(g)) / static_cast<double>(g.n());
}

std::int64_t ceil_average_degree(const Graph& g) {
  require_vertices(g, "ceil_average_degree");
  const auto n = static_cast<std::int64_t>(g.n());
  const auto twice_m = 2 * static_cast<std::int64_t>(g.m());
  return (twice_m + n - 1) / n;
}

double stanley_bound(std::size_t m) { return std::sqrt(2.0 * static_cast<double>(m)); }

double mixed_bound(std::size_t m_a, std::size_t m_ab) {
  const double a = static_cast<double>(m_a);
  const double ab = static_cast<double>(m_ab);
  return std::sqrt(a + ab + std::sqrt(a * a + 2.0 * a * ab));
}

double alpha_star(std::size_t m_a, std::size_t m_ab) {
  if (m_ab == 0) throw std::invalid_argument("alpha_star: m_ab must be at least 1");
  if (m_a == 0) return 0.0;
  const double ratio = static_cast<double>(m_a) / static_cast<double>(m_ab);
  // sqrt(r^2 + 2r) - r, rewritten to avoid cancellation for large r.
  return 2.0 * ratio / (std::sqrt(ratio * ratio + 2.0 * ratio) + ratio);
}

double alpha_balance_residual(std::size_t m_a, std::size_t m_ab, double alpha) {
  const double a = static_cast<double>(m_a);
  const double ab = static_cast<double>(m_ab);
  return (2.0 * a + (1.0 + alpha) * ab) - (2.0 / alpha * a + ab);
}

BoundReport deviation_bounds(const Graph& g, const SpectralResult& r) {
  require_vertices(g, "deviation_bounds");
  BoundReport report;
  report.n = g.n();
  report.m = g.m();
  report.d_avg = 2.0 * static_cast<double>(g.m()) / static_cast<double>(g.n());
  report.s = degree_deviation(g);
  report.lambda = r.lambda;
  report.gap = r.lambda - report.d_avg;
  report.stanley = stanley_bound(g.m());
  const double root_m = std::sqrt(static_cast<double>(g.m()));
  if (is_bipartite(g)) report.bipartite_bound = root_m;
  if (is_triangle_free(g)) report.nosal = root_m;
  report.nikiforov = std::sqrt(report.s);
  report.zhang = std::sqrt(0.9 * report.s);
  report.thm1 = std::sqrt(2.0 * report.s / 3.0);
  report.conjecture = std::sqrt(report.s / 2.0);

  double gap = report.gap;
  if (gap < 0.0) {
    report.gap_anomaly = gap < -kNegativeGapClamp;
    gap = 0.0;
  }
  if (scaled_degree_deviation(g) > 0) report.ratio = gap * gap / report.s;
  return report;
}

double split_graph_lambda(std::size_t q, std::size_t n) {
  if (q < 1 || q > n) {
    throw std::invalid_argument("split_graph_lambda: requires 1 <= q <= n (q=" +
                                std::to_string(q) + ", n=" + std::to_string(n) + ")");
  }
  const double qd = static_cast<double>(q);
  const double nd = static_cast<double>(n);
  return 0.5 * (qd - 1.0 + std::sqrt((4.0 * nd - 2.0) * qd - 3.0 * qd * qd + 1.0));
}

double split_graph_lambda_cubic(std::size_t q, std::size_t n) {
  if (q < 1 || q > n) {
    throw std::invalid_argument("split_graph_lambda_cubic: requires 1 <= q <= n");
  }
  const double qd = static_cast<double>(q);
  const double nd = static_cast<double>(n);
  const double radicand = (4.0 * nd - 2.0) * qd - 3.0 * qd * qd * qd + 1.0;
  if (radicand < 0.0) return std::numeric_limits<double>::quiet_NaN();
  return 0.5 * (qd - 1.0 + std::sqrt(radicand));
}

Maximizer e11_maximize(double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("e11_maximize: s must be nonnegative");
  auto f = [s](double x) {
    const double inner = std::max(0.0, x * (s - 3.0 * x));
    return std::sqrt(std::max(0.0, s / 2.0 - x + std::sqrt(inner)));
  };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 0.0;
  double hi = s / 4.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < 200; ++iter) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x)};
}

}  // namespace spectra
