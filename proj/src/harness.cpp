#include "spectra/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <memory>
#include <random>
#include <sstream>
#include <thread>

#include "spectra/bounds.hpp"
#include "spectra/decomposition.hpp"
#include "spectra/generators.hpp"
#include "spectra/graph6.hpp"

namespace spectra {

// ---------------------------------------------------------------------------
// Corpora

Corpus Corpus::exhaustive(std::size_t n) {
  if (n > kMaxExhaustiveScanOrder) {
    throw GraphError("exhaustive scan limited to n <= " + std::to_string(kMaxExhaustiveScanOrder) +
                     " (n=" + std::to_string(n) + ")");
  }
  const auto count = static_cast<std::size_t>(labeled_count(n));
  return Corpus("exhaustive:" + std::to_string(n), count,
                [n](std::size_t i) { return labeled_graph(n, i); });
}

Corpus Corpus::random(std::size_t n, std::size_t m, std::size_t count, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  if (m > pairs) {
    throw GraphError("random corpus: m=" + std::to_string(m) + " exceeds C(n,2)=" + std::to_string(pairs));
  }
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> seeds(count);
  for (auto& s : seeds) s = rng();
  std::ostringstream desc;
  desc << "random:n=" << n << ",m=" << m << ",count=" << count << ",seed=" << seed;
  return Corpus(desc.str(), count,
                [n, m, seeds = std::move(seeds)](std::size_t i) { return random_gnm(n, m, seeds[i]); });
}

Corpus Corpus::from_graphs(std::vector<Graph> graphs, std::string descriptor) {
  auto shared = std::make_shared<const std::vector<Graph>>(std::move(graphs));
  const std::size_t size = shared->size();
  return Corpus(std::move(descriptor), size, [shared](std::size_t i) { return (*shared)[i]; });
}

Corpus Corpus::graph6_text(std::string_view text, std::string descriptor) {
  std::vector<Graph> graphs;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty() || line.front() == '#') continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const GraphError& e) {
      throw GraphError(descriptor + " line " + std::to_string(line_no) + ": " + e.what());
    }
    if (end == text.size()) break;
  }
  return from_graphs(std::move(graphs), std::move(descriptor));
}

Corpus Corpus::graph6_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot read corpus file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return graph6_text(buffer.str(), "file:" + path);
}

Corpus Corpus::complete_split_family(std::size_t max_n) {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t q = 1; q <= n; ++q) graphs.push_back(complete_split(q, n));
  }
  return from_graphs(std::move(graphs), "family:cs:" + std::to_string(max_n));
}

Corpus Corpus::blowup_family(const Graph& g, std::size_t max_t) {
  std::vector<Graph> graphs;
  for (std::size_t t = 1; t <= max_t; ++t) graphs.push_back(blow_up(g, t));
  return from_graphs(std::move(graphs), "family:blowup:" + encode_graph6(g) + ":" + std::to_string(max_t));
}

std::set<std::string> parse_checks(std::string_view text) {
  std::set<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string name(text.substr(start, end - start));
    start = end + 1;
    if (name.empty()) continue;
    if (name == "all") {
      out.insert(known_checks().begin(), known_checks().end());
    } else if (std::find(known_checks().begin(), known_checks().end(), name) != known_checks().end()) {
      out.insert(name);
    } else {
      throw std::invalid_argument("unknown check '" + name + "'");
    }
    if (end == text.size()) break;
  }
  if (out.empty()) throw std::invalid_argument("no checks selected");
  return out;
}

std::optional<double> conjecture_ratio(const Graph& g, const SpectralResult& r) {
  return deviation_bounds(g, r).ratio;
}

// ---------------------------------------------------------------------------
// Scanning

namespace {

struct Partial {
  std::size_t graphs = 0;
  std::vector<Violation> violations;
  std::optional<Witness> max_ratio;
  std::size_t conjecture_flagged = 0;
  std::optional<Witness> max_tightness;
  std::size_t splits_checked = 0;
  std::size_t splits_skipped = 0;
  std::vector<GraphRow> rows;
};

void keep_max(std::optional<Witness>& slot, const std::optional<Witness>& candidate) {
  if (candidate && (!slot || candidate->value > slot->value)) slot = candidate;
}

class GraphChecker {
 public:
  GraphChecker(const ScanOptions& options, Partial& out) : options_(options), out_(out) {}

  void run(const Graph& g) {
    ++out_.graphs;
    graph6_ = encode_graph6(g);
    failed_ = false;
    const SpectralResult r = spectral_radius(g, options_.spectral);
    if (!r.converged) fail("spectral_convergence", r.residual, options_.spectral.tol, "power iteration did not converge");
    if (g.n() == 0) return;

    const BoundReport report = deviation_bounds(g, r);
    if (report.ratio) {
      keep_max(out_.max_ratio, Witness{*report.ratio, graph6_, {}});
      if (*report.ratio > 0.5) ++out_.conjecture_flagged;
    }
    if (report.gap_anomaly) fail("gap_anomaly", report.lambda, report.d_avg, "lambda below 2m/n");

    if (enabled("thm1")) check("thm1", report.gap, report.thm1);
    if (enabled("conjecture")) check("conjecture", report.gap, report.conjecture);
    if (enabled("stanley")) check("stanley", report.lambda, report.stanley);
    if (enabled("bipartite") && report.bipartite_bound) check("bipartite", report.lambda, *report.bipartite_bound);
    if (enabled("nosal") && report.nosal) check("nosal", report.lambda, *report.nosal);
    if (enabled("thm2_all_splits")) check_all_splits(g, r.lambda);
    if (enabled("decomposition") || enabled("chain")) check_decomposition(g, r);

    if (options_.collect_rows) {
      out_.rows.push_back({graph6_, report.n, report.m, report.lambda, report.s, report.ratio, report.stanley,
                           report.thm1, report.zhang, report.nikiforov, report.conjecture, !failed_});
    }
  }

 private:
  bool enabled(const char* name) const { return options_.checks.count(name) > 0; }

  void fail(std::string check, double lhs, double rhs, std::string note = {}) {
    failed_ = true;
    out_.violations.push_back({std::move(check), graph6_, lhs, rhs, std::move(note)});
  }

  void check(const char* name, double lhs, double rhs) {
    if (lhs > rhs + kCheckTolerance) fail(name, lhs, rhs);
  }

  void check_all_splits(const Graph& g, double lambda) {
    const std::size_t n = g.n();
    if (n > kMaxSplitEnumerationOrder) {
      throw GraphError("thm2_all_splits enumerates 2^n vertex subsets and is limited to n <= 8 (n=" +
                       std::to_string(n) + ")");
    }
    std::optional<Witness> best;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::size_t m_a = 0;
      std::size_t m_ab = 0;
      std::size_t m_b = 0;
      for (const Edge& e : g.edges()) {
        const int inside = static_cast<int>((mask >> e.u) & 1) + static_cast<int>((mask >> e.v) & 1);
        (inside == 2 ? m_a : inside == 1 ? m_ab : m_b)++;
      }
      if (m_b > 0) {
        ++out_.splits_skipped;
        continue;
      }
      ++out_.splits_checked;
      const double bound = mixed_bound(m_a, m_ab);
      if (lambda > bound + kCheckTolerance) fail("thm2_all_splits", lambda, bound, "A mask " + std::to_string(mask));
      if (bound > 0.0) keep_max(best, Witness{lambda / bound, graph6_, "A mask " + std::to_string(mask)});
    }
    keep_max(out_.max_tightness, best);
  }

  void check_decomposition(const Graph& g, const SpectralResult& r) {
    const Decomposition dec = build_decomposition(g);
    if (enabled("decomposition")) {
      for (const CheckResult& c : verify_decomposition(g, dec)) {
        if (!c.passed) fail("decomposition", 0.0, 0.0, c.name + ": " + c.witness);
      }
    }
    if (enabled("chain")) {
      const ChainReport chain = certificate_chain(g, dec, r, options_.spectral);
      if (!chain.converged) fail("chain", 0.0, 0.0, "power iteration did not converge on G' or G''");
      if (!chain.subadditive) fail("chain", chain.lambda, chain.link_sum, "lambda(G) <= lambda(G') + lambda(G'')");
      if (!chain.degree_and_mixed) fail("chain", chain.link_sum, chain.link_mixed, "lambda(G') + lambda(G'') <= d+1+mixed");
      if (!chain.deviation) fail("chain", chain.link_mixed, chain.link_deviation, "d+1+mixed <= d+1+sqrt(2s/3)");
    }
  }

  const ScanOptions& options_;
  Partial& out_;
  std::string graph6_;
  bool failed_ = false;
};

}  // namespace

ScanReport scan(const Corpus& corpus, const ScanOptions& options, std::vector<GraphRow>* rows) {
  for (const auto& name : options.checks) {
    if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end()) {
      throw std::invalid_argument("unknown check '" + name + "'");
    }
  }
  const auto started = std::chrono::steady_clock::now();
  const std::size_t total = corpus.size();
  const std::size_t workers = std::max<std::size_t>(1, std::min(options.parallelism, std::max<std::size_t>(total, 1)));

  ScanOptions local = options;
  local.collect_rows = options.collect_rows || rows != nullptr;
  std::vector<Partial> partials(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t w) {
    try {
      const std::size_t begin = total * w / workers;
      const std::size_t end = total * (w + 1) / workers;
      GraphChecker checker(local, partials[w]);
      for (std::size_t i = begin; i < end; ++i) checker.run(corpus.at(i));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  ScanReport report;
  report.corpus = corpus.descriptor();
  report.checks.assign(options.checks.begin(), options.checks.end());
  for (Partial& p : partials) {
    report.graphs_scanned += p.graphs;
    report.violations.insert(report.violations.end(), std::make_move_iterator(p.violations.begin()),
                             std::make_move_iterator(p.violations.end()));
    keep_max(report.max_ratio, p.max_ratio);
    report.conjecture_flagged += p.conjecture_flagged;
    keep_max(report.max_thm2_tightness, p.max_tightness);
    report.splits_checked += p.splits_checked;
    report.splits_skipped += p.splits_skipped;
    if (rows) rows->insert(rows->end(), std::make_move_iterator(p.rows.begin()), std::make_move_iterator(p.rows.end()));
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

// ---------------------------------------------------------------------------
// Hill climbing

ClimbResult hill_climb(std::size_t n, std::size_t steps, std::uint64_t seed, std::size_t restarts,
                       const SpectralOptions& spectral) {
  if (n < 3 || n > 60) throw std::invalid_argument("hill_climb: requires 3 <= n <= 60 (n=" + std::to_string(n) + ")");
  if (steps < 1 || restarts < 1) throw std::invalid_argument("hill_climb: steps and restarts must be >= 1");

  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  }
  auto objective = [&](const Graph& g) {
    const auto ratio = conjecture_ratio(g, spectral_radius(g, spectral));
    return ratio ? *ratio : -std::numeric_limits<double>::infinity();
  };

  std::mt19937_64 rng(seed);
  ClimbResult result;
  result.best_ratio = -std::numeric_limits<double>::infinity();
  for (std::size_t restart = 0; restart < restarts; ++restart) {
    std::uniform_int_distribution<std::size_t> edge_count(0, pairs.size());
    Graph current = random_gnm(n, edge_count(rng), rng());
    std::vector<char> present(pairs.size(), 0);
    for (std::size_t k = 0; k < pairs.size(); ++k) present[k] = current.has_edge(pairs[k].u, pairs[k].v);
    double current_ratio = objective(current);
    if (std::isfinite(current_ratio)) {
      result.trace.push_back({restart, 0, current_ratio, encode_graph6(current)});
    }

    std::vector<std::size_t> order(pairs.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::shuffle(order.begin(), order.end(), rng);

    std::size_t cursor = 0;
    std::size_t stall = 0;
    for (std::size_t step = 1; step <= steps && stall < pairs.size(); ++step) {
      const std::size_t k = order[cursor];
      cursor = (cursor + 1) % order.size();
      present[k] ^= 1;
      std::vector<Edge> edges;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        if (present[j]) edges.push_back(pairs[j]);
      }
      Graph candidate = Graph::from_edges(n, edges);
      const double ratio = objective(candidate);
      if (ratio > current_ratio) {
        current = std::move(candidate);
        current_ratio = ratio;
        stall = 0;
        result.trace.push_back({restart, step, ratio, encode_graph6(current)});
      } else {
        present[k] ^= 1;
        ++stall;
      }
    }
    if (current_ratio > result.best_ratio) {
      result.best_ratio = current_ratio;
      result.best_graph6 = encode_graph6(current);
    }
  }
  return result;
}

}  // namespace spectra
