#include "spectra/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "spectra/bounds.hpp"
#include "spectra/decomposition.hpp"
#include "spectra/generators.hpp"
#include "spectra/graph6.hpp"
#include "spectra/harness.hpp"
#include "spectra/report.hpp"
#include "spectra/spectral.hpp"

namespace spectra {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string human(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

std::string human(const std::optional<double>& value) { return value ? human(*value) : "n/a"; }

struct InputOptions {
  std::string graph6;
  std::string edges;
  std::string dash;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph6", graph6, "Input graph as a graph6 string");
    cmd->add_option("--edges", edges, "Input graph as an edge-list file (\"n m\" header, then \"u v\" lines)");
    cmd->add_option("stdin", dash, "'-' reads graph6 lines from standard input");
  }

  std::size_t sources() const {
    return static_cast<std::size_t>(!graph6.empty()) + static_cast<std::size_t>(!edges.empty()) +
           static_cast<std::size_t>(!dash.empty());
  }

  bool from_stdin() const { return !dash.empty(); }

  std::vector<Graph> load(std::istream& in) const {
    if (sources() != 1) throw UsageError("exactly one input source required: --graph6, --edges, or -");
    if (!graph6.empty()) return {parse_graph6(graph6)};
    if (!edges.empty()) {
      std::ifstream file(edges);
      if (!file) throw UsageError("cannot read edge-list file " + edges);
      std::ostringstream buffer;
      buffer << file.rdbuf();
      return {parse_edge_list(buffer.str())};
    }
    if (dash != "-") throw UsageError("unexpected positional argument '" + dash + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const Corpus corpus = Corpus::graph6_text(buffer.str(), "stdin");
    std::vector<Graph> graphs;
    for (std::size_t i = 0; i < corpus.size(); ++i) graphs.push_back(corpus.at(i));
    return graphs;
  }
};

struct SpectralFlags {
  double tol = 1e-10;
  std::size_t max_iter = 1000000;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tol", tol, "Residual tolerance ||Ax - lambda x||_inf")->capture_default_str();
    cmd->add_option("--max-iter", max_iter, "Power-iteration limit")->capture_default_str();
  }

  SpectralOptions options() const {
    if (!(tol > 0.0)) throw UsageError("--tol must be positive");
    if (max_iter < 1) throw UsageError("--max-iter must be at least 1");
    return {tol, max_iter};
  }
};

void add_format(CLI::App* cmd, std::string& format, std::vector<std::string> choices) {
  cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(choices)))->capture_default_str();
}

void write_documents(std::ostream& out, std::vector<Json> docs, bool as_array) {
  if (as_array) {
    Json arr = Json::array();
    for (auto& d : docs) arr.push_back(std::move(d));
    out << dump_report(arr);
  } else {
    for (const auto& d : docs) out << dump_report(d);
  }
}

// Pair pulls an (a,b) integer pair from "a,b".
std::pair<std::size_t, std::size_t> parse_pair(const std::string& text, const char* flag) {
  std::size_t a = 0;
  std::size_t b = 0;
  char comma = 0;
  std::istringstream in(text);
  std::string rest;
  if (!(in >> a >> comma >> b) || comma != ',' || (in >> rest)) {
    throw UsageError(std::string(flag) + " expects two comma-separated integers, got '" + text + "'");
  }
  return {a, b};
}

GraphRow row_for(const Graph& g, const BoundReport& b, bool passed) {
  return {encode_graph6(g), b.n, b.m, b.lambda, b.s, b.ratio, b.stanley, b.thm1, b.zhang, b.nikiforov,
          b.conjecture, passed};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral radius, degree deviation and the bounds relating them", "spectra"};
  app.require_subcommand(1);

  // compute
  InputOptions compute_in;
  SpectralFlags compute_spec;
  std::string compute_format = "json";
  auto* compute = app.add_subcommand(
      "compute",
      "Largest adjacency eigenvalue and Perron vector by shifted power iteration; also reports the "
      "two-step identity residual lambda^2 x_u = x_u d(u) + sum_{v~u} sum_{w~v, w!=u} x_w");
  compute_in.attach(compute);
  compute_spec.attach(compute);
  add_format(compute, compute_format, {"json", "human", "csv"});

  // bounds
  InputOptions bounds_in;
  SpectralFlags bounds_spec;
  std::string bounds_format = "json";
  auto* bounds = app.add_subcommand(
      "bounds",
      "Degree deviation s and the bound ladder: lambda <= sqrt(2m) (Stanley), lambda <= sqrt(m) for "
      "bipartite / triangle-free graphs, and lambda - 2m/n <= sqrt(2s/3) <= sqrt(9s/10) <= sqrt(s), "
      "with the conjecture ratio (lambda - 2m/n)^2 / s");
  bounds_in.attach(bounds);
  bounds_spec.attach(bounds);
  add_format(bounds, bounds_format, {"json", "human", "csv"});

  // decompose
  InputOptions decompose_in;
  SpectralFlags decompose_spec;
  std::string decompose_format = "json";
  auto* decompose = app.add_subcommand(
      "decompose",
      "Builds the E0/H/C'/C''/A/B decomposition G = G' + G'', verifies every structural claim, and "
      "checks the chain lambda <= lambda(G') + lambda(G'') <= d+1 + sqrt(m_A + m_AB + sqrt(m_A^2 + "
      "2 m_A m_AB)) <= d+1 + sqrt(2s/3)");
  decompose_in.attach(decompose);
  decompose_spec.attach(decompose);
  add_format(decompose, decompose_format, {"json", "human"});

  // scan
  InputOptions scan_in;
  SpectralFlags scan_spec;
  std::size_t scan_exhaustive = 0;
  std::string scan_random;
  std::uint64_t scan_seed = 1;
  std::string scan_file;
  std::string scan_family;
  std::string scan_checks = "thm1,conjecture,stanley,bipartite,nosal,decomposition,chain";
  std::size_t scan_parallelism = std::max(1u, std::thread::hardware_concurrency());
  std::string scan_csv;
  bool scan_timing = false;
  std::string scan_format = "json";
  auto* scan_cmd = app.add_subcommand(
      "scan",
      "Runs a corpus through bound checks: thm1 (lambda - 2m/n <= sqrt(2s/3)), conjecture "
      "(lambda - 2m/n <= sqrt(s/2)), stanley, bipartite, nosal, thm2_all_splits (lambda <= "
      "sqrt(m_A + m_AB + sqrt(m_A^2 + 2 m_A m_AB)) for every A with no edge inside B), decomposition, chain");
  scan_in.attach(scan_cmd);
  scan_spec.attach(scan_cmd);
  scan_cmd->add_option("--exhaustive", scan_exhaustive, "All labeled graphs on N vertices (N <= 7)");
  scan_cmd->add_option("--random", scan_random, "n,m,count random G(n,m) graphs");
  scan_cmd->add_option("--seed", scan_seed, "Seed for --random")->capture_default_str();
  scan_cmd->add_option("--file", scan_file, "graph6 corpus file, one graph per line, '#' comments");
  scan_cmd->add_option("--family", scan_family, "cs:N (all CS(q,n), n <= N) or blowup:<graph6>:T");
  scan_cmd->add_option("--checks", scan_checks, "Comma-separated checks, or 'all'")->capture_default_str();
  scan_cmd->add_option("--parallelism", scan_parallelism, "Worker threads (default: available cores)");
  scan_cmd->add_option("--csv", scan_csv, "Also write one CSV row per graph to this file");
  scan_cmd->add_flag("--timing", scan_timing, "Include elapsed time in the report");
  add_format(scan_cmd, scan_format, {"json", "human"});

  // search
  std::size_t search_n = 8;
  std::size_t search_steps = 2000;
  std::size_t search_restarts = 5;
  std::uint64_t search_seed = 1;
  SpectralFlags search_spec;
  std::string search_format = "json";
  auto* search = app.add_subcommand(
      "search",
      "Restarted edge-flip hill climbing for graphs maximizing (lambda - 2m/n)^2 / s, to probe how close "
      "the ratio gets to 2/3 (proved) and 1/2 (conjectured)");
  search->add_option("--n", search_n, "Vertex count (3..60)")->capture_default_str();
  search->add_option("--steps", search_steps, "Flip proposals per restart")->capture_default_str();
  search->add_option("--restarts", search_restarts, "Number of restarts")->capture_default_str();
  search->add_option("--seed", search_seed, "Random seed")->capture_default_str();
  search_spec.attach(search);
  add_format(search, search_format, {"json", "human"});

  // blowup
  InputOptions blowup_in;
  std::size_t blowup_t = 0;
  std::string blowup_format = "json";
  auto* blowup = app.add_subcommand(
      "blowup",
      "Replaces every vertex by an independent set of t copies; lambda scales by t and s by t^2, so the "
      "conjecture ratio is unchanged");
  blowup_in.attach(blowup);
  blowup->add_option("--t", blowup_t, "Copies per vertex (>= 1)")->required();
  add_format(blowup, blowup_format, {"json", "human", "edges"});

  // gen
  std::string gen_cs;
  std::string gen_gnm;
  std::uint64_t gen_seed = 1;
  std::string gen_format = "json";
  auto* gen = app.add_subcommand(
      "gen",
      "Generates CS(q,n) (q universal vertices over an independent set, spectral radius "
      "(q-1+sqrt((4n-2)q-3q^2+1))/2) or a seeded uniform G(n,m)");
  gen->add_option("--cs", gen_cs, "q,n complete split graph");
  gen->add_option("--gnm", gen_gnm, "n,m random graph");
  gen->add_option("--seed", gen_seed, "Seed for --gnm")->capture_default_str();
  add_format(gen, gen_format, {"json", "human", "edges"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "spectra: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      const auto options = compute_spec.options();
      const auto graphs = compute_in.load(in);
      bool ok = true;
      std::vector<Json> docs;
      if (compute_format == "csv") out << csv_header();
      for (const Graph& g : graphs) {
        const SpectralResult r = spectral_radius(g, options);
        ok = ok && r.converged;
        const double two_step = two_step_residual(g, r);
        if (compute_format == "json") {
          Json doc = report_header("compute");
          doc["graph6"] = encode_graph6(g);
          doc["n"] = g.n();
          doc["m"] = g.m();
          doc["spectral"] = to_json(r, true);
          doc["two_step_residual"] = two_step;
          docs.push_back(std::move(doc));
        } else if (compute_format == "csv") {
          if (g.n() == 0) continue;
          out << csv_row(row_for(g, deviation_bounds(g, r), r.converged));
        } else {
          out << encode_graph6(g) << ": n=" << g.n() << " m=" << g.m() << " lambda=" << human(r.lambda)
              << " residual=" << human(r.residual) << " iterations=" << r.iterations
              << (r.converged ? "" : " NOT CONVERGED") << '\n';
        }
      }
      if (compute_format == "json") write_documents(out, std::move(docs), compute_in.from_stdin());
      return ok ? kExitOk : kExitViolation;
    }

    if (bounds->parsed()) {
      const auto options = bounds_spec.options();
      const auto graphs = bounds_in.load(in);
      bool ok = true;
      std::vector<Json> docs;
      if (bounds_format == "csv") out << csv_header();
      for (const Graph& g : graphs) {
        if (g.n() == 0) throw UsageError("bounds need at least one vertex (2m/n undefined)");
        const SpectralResult r = spectral_radius(g, options);
        const BoundReport b = deviation_bounds(g, r);
        const double tol = kCheckTolerance;
        Json checks = {{"converged", r.converged},
                       {"stanley", b.lambda <= b.stanley + tol},
                       {"bipartite", !b.bipartite_bound || b.lambda <= *b.bipartite_bound + tol},
                       {"nosal", !b.nosal || b.lambda <= *b.nosal + tol},
                       {"thm1", b.gap <= b.thm1 + tol},
                       {"zhang", b.gap <= b.zhang + tol},
                       {"nikiforov", b.gap <= b.nikiforov + tol},
                       {"conjecture", b.gap <= b.conjecture + tol},
                       {"gap_anomaly_free", !b.gap_anomaly}};
        bool passed = true;
        for (const auto& [name, value] : checks.items()) passed = passed && value.get<bool>();
        ok = ok && passed;
        if (bounds_format == "json") {
          Json doc = report_header("bounds");
          doc["graph6"] = encode_graph6(g);
          doc["bounds"] = to_json(b);
          doc["checks"] = std::move(checks);
          docs.push_back(std::move(doc));
        } else if (bounds_format == "csv") {
          out << csv_row(row_for(g, b, passed));
        } else {
          out << encode_graph6(g) << ": n=" << b.n << " m=" << b.m << " lambda=" << human(b.lambda)
              << " 2m/n=" << human(b.d_avg) << " s=" << human(b.s) << '\n'
              << "  stanley sqrt(2m)=" << human(b.stanley) << "  bipartite sqrt(m)=" << human(b.bipartite_bound)
              << "  triangle-free sqrt(m)=" << human(b.nosal) << '\n'
              << "  gap=" << human(b.gap) << "  sqrt(2s/3)=" << human(b.thm1) << "  sqrt(9s/10)=" << human(b.zhang)
              << "  sqrt(s)=" << human(b.nikiforov) << "  sqrt(s/2)=" << human(b.conjecture) << '\n'
              << "  ratio=" << human(b.ratio) << (passed ? "" : "  CHECK FAILED") << '\n';
        }
      }
      if (bounds_format == "json") write_documents(out, std::move(docs), bounds_in.from_stdin());
      return ok ? kExitOk : kExitViolation;
    }

    if (decompose->parsed()) {
      const auto options = decompose_spec.options();
      const auto graphs = decompose_in.load(in);
      bool ok = true;
      std::vector<Json> docs;
      for (const Graph& g : graphs) {
        if (g.n() == 0) throw UsageError("decomposition needs at least one vertex");
        const SpectralResult r = spectral_radius(g, options);
        const Decomposition dec = build_decomposition(g);
        const auto checks = verify_decomposition(g, dec);
        const Certificate cert = theorem1_certificate(g, dec, r);
        const ChainReport chain = certificate_chain(g, dec, r, options);
        const bool passed = all_passed(checks) && cert.holds && chain.holds();
        ok = ok && passed;
        if (decompose_format == "json") {
          Json doc = report_header("decompose");
          doc["graph6"] = encode_graph6(g);
          doc["n"] = g.n();
          doc["m"] = g.m();
          doc["decomposition"] = to_json(dec);
          doc["checks"] = to_json(checks);
          doc["certificate"] = to_json(cert);
          doc["chain"] = to_json(chain);
          doc["passed"] = passed;
          docs.push_back(std::move(doc));
        } else {
          out << encode_graph6(g) << ": d=" << dec.d << " |C|=" << dec.c.size() << " |E0|=" << dec.e0.size()
              << " |A|=" << dec.a.size() << " m_A=" << dec.m_a << " m_AB=" << dec.m_ab << '\n';
          for (const auto& c : checks) {
            out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
            if (!c.passed) out << "  (" << c.witness << ')';
            out << '\n';
          }
          out << "  lambda=" << human(chain.lambda) << " <= " << human(chain.link_sum) << " <= "
              << human(chain.link_mixed) << " <= " << human(chain.link_deviation)
              << (chain.holds() ? "" : "  CHAIN FAILED") << '\n';
        }
      }
      if (decompose_format == "json") write_documents(out, std::move(docs), decompose_in.from_stdin());
      return ok ? kExitOk : kExitViolation;
    }

    if (scan_cmd->parsed()) {
      const std::size_t corpus_sources = static_cast<std::size_t>(scan_exhaustive > 0) +
                                         static_cast<std::size_t>(!scan_random.empty()) +
                                         static_cast<std::size_t>(!scan_file.empty()) +
                                         static_cast<std::size_t>(!scan_family.empty()) + scan_in.sources();
      if (corpus_sources != 1) {
        throw UsageError("exactly one corpus required: --exhaustive, --random, --file, --family, --graph6, --edges, or -");
      }
      std::optional<Corpus> corpus;
      if (scan_exhaustive > 0) {
        corpus = Corpus::exhaustive(scan_exhaustive);
      } else if (!scan_random.empty()) {
        std::size_t n = 0;
        std::size_t m = 0;
        std::size_t count = 0;
        char c1 = 0;
        char c2 = 0;
        std::istringstream spec(scan_random);
        std::string rest;
        if (!(spec >> n >> c1 >> m >> c2 >> count) || c1 != ',' || c2 != ',' || (spec >> rest)) {
          throw UsageError("--random expects n,m,count");
        }
        corpus = Corpus::random(n, m, count, scan_seed);
      } else if (!scan_file.empty()) {
        corpus = Corpus::graph6_file(scan_file);
      } else if (!scan_family.empty()) {
        if (scan_family.starts_with("cs:")) {
          corpus = Corpus::complete_split_family(std::stoul(scan_family.substr(3)));
        } else if (scan_family.starts_with("blowup:")) {
          const std::string rest = scan_family.substr(7);
          const auto colon = rest.rfind(':');
          if (colon == std::string::npos) throw UsageError("--family blowup:<graph6>:T");
          corpus = Corpus::blowup_family(parse_graph6(rest.substr(0, colon)), std::stoul(rest.substr(colon + 1)));
        } else {
          throw UsageError("--family expects cs:N or blowup:<graph6>:T");
        }
      } else {
        corpus = Corpus::from_graphs(scan_in.load(in), scan_in.from_stdin() ? "stdin" : "input");
      }

      ScanOptions options;
      options.checks = parse_checks(scan_checks);
      options.parallelism = std::max<std::size_t>(1, scan_parallelism);
      options.spectral = scan_spec.options();
      std::vector<GraphRow> rows;
      const ScanReport report = scan(*corpus, options, scan_csv.empty() ? nullptr : &rows);
      if (!scan_csv.empty()) {
        std::ofstream csv(scan_csv);
        if (!csv) throw UsageError("cannot write " + scan_csv);
        csv << csv_header();
        for (const auto& row : rows) csv << csv_row(row);
      }
      if (scan_format == "json") {
        out << dump_report(to_json(report, scan_timing));
      } else {
        out << report.corpus << ": " << report.graphs_scanned << " graphs, " << report.violations.size()
            << " violations\n";
        for (const auto& v : report.violations) {
          out << "  " << v.check << ' ' << v.graph6 << ' ' << human(v.lhs) << " > " << human(v.rhs);
          if (!v.note.empty()) out << " (" << v.note << ')';
          out << '\n';
        }
        if (report.max_ratio) {
          out << "  max ratio " << human(report.max_ratio->value) << " at " << report.max_ratio->graph6
              << (report.conjecture_flagged > 0 ? "  ABOVE 1/2" : "") << '\n';
        }
        if (report.max_thm2_tightness) {
          out << "  max lambda/mixed " << human(report.max_thm2_tightness->value) << " at "
              << report.max_thm2_tightness->graph6 << '\n';
        }
        if (scan_timing) out << "  " << human(report.elapsed_seconds) << " s\n";
      }
      return report.violations.empty() ? kExitOk : kExitViolation;
    }

    if (search->parsed()) {
      const ClimbResult climb = hill_climb(search_n, search_steps, search_seed, search_restarts, search_spec.options());
      if (search_format == "json") {
        out << dump_report(to_json(climb));
      } else {
        out << "best ratio " << human(climb.best_ratio) << " at " << climb.best_graph6 << " ("
            << climb.trace.size() << " improvements)\n";
      }
      return climb.best_ratio <= 2.0 / 3.0 + kCheckTolerance ? kExitOk : kExitViolation;
    }

    auto emit_graphs = [&](const std::vector<Graph>& graphs, const std::string& kind, const std::string& format,
                           bool as_array) {
      std::vector<Json> docs;
      for (const Graph& g : graphs) {
        if (format == "json") {
          Json doc = report_header(kind);
          doc["graph6"] = encode_graph6(g);
          doc["n"] = g.n();
          doc["m"] = g.m();
          docs.push_back(std::move(doc));
        } else if (format == "edges") {
          out << format_edge_list(g);
        } else {
          out << encode_graph6(g) << '\n';
        }
      }
      if (format == "json") write_documents(out, std::move(docs), as_array);
    };

    if (blowup->parsed()) {
      if (blowup_t < 1) throw UsageError("--t must be at least 1");
      std::vector<Graph> graphs;
      for (const Graph& g : blowup_in.load(in)) graphs.push_back(blow_up(g, blowup_t));
      emit_graphs(graphs, "blowup", blowup_format, blowup_in.from_stdin());
      return kExitOk;
    }

    if (gen->parsed()) {
      if (gen_cs.empty() == gen_gnm.empty()) throw UsageError("exactly one of --cs or --gnm required");
      Graph g;
      if (!gen_cs.empty()) {
        const auto [q, n] = parse_pair(gen_cs, "--cs");
        g = complete_split(q, n);
      } else {
        const auto [n, m] = parse_pair(gen_gnm, "--gnm");
        g = random_gnm(n, m, gen_seed);
      }
      emit_graphs({g}, "gen", gen_format, false);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "spectra: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace spectra
