#ifndef SPECTRA_HARNESS_HPP
#define SPECTRA_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

/// Index-addressable graph source. Every corpus can produce its i-th graph
/// independently, which is what lets scans split work into chunks.
class Corpus {
 public:
  /// All labeled graphs on exactly n vertices, n <= 7.
  static Corpus exhaustive(std::size_t n);
  /// `count` graphs G(n, m); graph i uses the i-th seed drawn from
  /// std::mt19937_64(seed).
  static Corpus random(std::size_t n, std::size_t m, std::size_t count, std::uint64_t seed);
  /// graph6 lines; blank lines, '#' comments and a ">>graph6<<" header are
  /// skipped. Throws GraphError naming the 1-based line of a malformed entry.
  static Corpus graph6_text(std::string_view text, std::string descriptor);
  static Corpus graph6_file(const std::string& path);
  /// CS(q, n) for all 1 <= q <= n <= max_n.
  static Corpus complete_split_family(std::size_t max_n);
  /// blow_up(g, t) for t = 1..max_t.
  static Corpus blowup_family(const Graph& g, std::size_t max_t);
  static Corpus from_graphs(std::vector<Graph> graphs, std::string descriptor);

  const std::string& descriptor() const { return descriptor_; }
  std::size_t size() const { return size_; }
  Graph at(std::size_t index) const { return fetch_(index); }

 private:
  Corpus(std::string descriptor, std::size_t size, std::function<Graph(std::size_t)> fetch)
      : descriptor_(std::move(descriptor)), size_(size), fetch_(std::move(fetch)) {}

  std::string descriptor_;
  std::size_t size_ = 0;
  std::function<Graph(std::size_t)> fetch_;
};

inline constexpr std::size_t kMaxExhaustiveScanOrder = 7;
inline constexpr std::size_t kMaxSplitEnumerationOrder = 8;
inline constexpr double kCheckTolerance = 1e-8;

/// Check names accepted by scan().
inline const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"thm1",    "thm2_all_splits", "conjecture",
                                                 "stanley", "bipartite",       "nosal",
                                                 "decomposition", "chain"};
  return names;
}

/// Parses a comma-separated check list ("all" selects every check).
std::set<std::string> parse_checks(std::string_view text);

struct Violation {
  std::string check;
  std::string graph6;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string note;
};

struct Witness {
  double value = 0.0;
  std::string graph6;
  std::string note;
};

struct ScanReport {
  std::string corpus;
  std::vector<std::string> checks;
  std::size_t graphs_scanned = 0;
  std::vector<Violation> violations;
  std::optional<Witness> max_ratio;
  std::size_t conjecture_flagged = 0;  ///< graphs with ratio above 1/2
  std::optional<Witness> max_thm2_tightness;
  std::size_t splits_checked = 0;
  std::size_t splits_skipped = 0;
  double elapsed_seconds = 0.0;
};

/// Per-graph values, one CSV row each.
struct GraphRow {
  std::string graph6;
  std::size_t n = 0;
  std::size_t m = 0;
  double lambda = 0.0;
  double s = 0.0;
  std::optional<double> ratio;
  double stanley = 0.0;
  double thm1 = 0.0;
  double zhang = 0.0;
  double nikiforov = 0.0;
  double conjecture = 0.0;
  bool passed = true;
};

struct ScanOptions {
  std::set<std::string> checks;
  std::size_t parallelism = 1;
  SpectralOptions spectral;
  bool collect_rows = false;
};

/// Streams the corpus through the enabled checks. Results do not depend on
/// parallelism: chunks are contiguous index ranges merged in order, and
/// argmax ties go to the lowest corpus index. Rows are appended to `rows`
/// when requested.
ScanReport scan(const Corpus& corpus, const ScanOptions& options,
                std::vector<GraphRow>* rows = nullptr);

/// (lambda - 2m/n)^2 / s, or nullopt for regular graphs.
std::optional<double> conjecture_ratio(const Graph& g, const SpectralResult& r);

struct ClimbStep {
  std::size_t restart = 0;
  std::size_t step = 0;
  double ratio = 0.0;
  std::string graph6;
};

struct ClimbResult {
  std::string best_graph6;
  double best_ratio = 0.0;
  std::vector<ClimbStep> trace;  ///< every accepted improvement
};

/// Restarted hill climbing over single edge flips, maximizing the conjecture
/// ratio (regular graphs score -infinity). A restart ends after `steps`
/// proposals or when a full pass over all pairs finds no improving flip.
ClimbResult hill_climb(std::size_t n, std::size_t steps, std::uint64_t seed, std::size_t restarts,
                       const SpectralOptions& spectral = {});

}  // namespace spectra

#endif  // SPECTRA_HARNESS_HPP
