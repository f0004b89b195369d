#include "spectra/report.hpp"

#include <cmath>
#include <cstdio>

namespace spectra {
namespace {

Json optional_number(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json vertex_list(const std::vector<Vertex>& vertices) { return Json(vertices); }

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  Json out = {{"value", w->value}, {"graph6", w->graph6}};
  if (!w->note.empty()) out["note"] = w->note;
  return out;
}

std::string number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace

Json report_header(const std::string& kind) { return {{"schema", kReportSchema}, {"kind", kind}}; }

Json to_json(const SpectralResult& r, bool include_vector) {
  Json out = {{"lambda", r.lambda},
              {"residual", r.residual},
              {"iterations", r.iterations},
              {"converged", r.converged}};
  if (include_vector) out["vector"] = r.vector;
  return out;
}

Json to_json(const BoundReport& b) {
  return {{"n", b.n},
          {"m", b.m},
          {"d_avg", b.d_avg},
          {"s", b.s},
          {"lambda", b.lambda},
          {"gap", b.gap},
          {"stanley", b.stanley},
          {"bipartite_bound", optional_number(b.bipartite_bound)},
          {"nosal", optional_number(b.nosal)},
          {"nikiforov", b.nikiforov},
          {"zhang", b.zhang},
          {"thm1", b.thm1},
          {"conjecture", b.conjecture},
          {"ratio", optional_number(b.ratio)},
          {"gap_anomaly", b.gap_anomaly}};
}

Json to_json(const Decomposition& dec) {
  return {{"d", dec.d},
          {"C", vertex_list(dec.c)},
          {"E0", edge_list(dec.e0)},
          {"C_prime", vertex_list(dec.c_prime)},
          {"C_double_prime", vertex_list(dec.c_double_prime)},
          {"A", vertex_list(dec.a)},
          {"B", vertex_list(dec.b)},
          {"E_A", edge_list(dec.e_a)},
          {"E_AB", edge_list(dec.e_ab)},
          {"m_A", dec.m_a},
          {"m_AB", dec.m_ab},
          {"H_m", dec.h.m()},
          {"G_prime_m", dec.g_prime.m()},
          {"G_prime_max_degree", dec.g_prime.max_degree()},
          {"G_double_prime_m", dec.g_double_prime.m()},
          {"exchange_swaps", dec.exchange_swaps}};
}

Json to_json(const std::vector<CheckResult>& checks) {
  Json out = Json::array();
  for (const CheckResult& c : checks) {
    Json item = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) item["witness"] = c.witness;
    out.push_back(std::move(item));
  }
  return out;
}

Json to_json(const Certificate& cert) {
  return {{"d", cert.d},         {"m_A", cert.m_a},   {"m_AB", cert.m_ab},
          {"lambda", cert.lambda}, {"bound", cert.bound_10}, {"slack", cert.slack},
          {"deviation_cap", cert.deviation_cap}, {"holds", cert.holds}};
}

Json to_json(const ChainReport& chain) {
  return {{"lambda", chain.lambda},
          {"lambda_G_prime", chain.lambda_g_prime},
          {"lambda_G_double_prime", chain.lambda_g_double_prime},
          {"sum", chain.link_sum},
          {"degree_plus_mixed", chain.link_mixed},
          {"degree_plus_deviation", chain.link_deviation},
          {"subadditive", chain.subadditive},
          {"degree_and_mixed", chain.degree_and_mixed},
          {"deviation", chain.deviation},
          {"converged", chain.converged},
          {"holds", chain.holds()}};
}

Json to_json(const ScanReport& report, bool include_timing) {
  Json out = report_header("scan");
  out["corpus"] = report.corpus;
  out["checks"] = report.checks;
  out["graphs_scanned"] = report.graphs_scanned;
  Json violations = Json::array();
  for (const Violation& v : report.violations) {
    Json item = {{"check", v.check}, {"graph6", v.graph6}, {"lhs", v.lhs}, {"rhs", v.rhs}};
    if (!v.note.empty()) item["note"] = v.note;
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  out["max_ratio"] = witness_json(report.max_ratio);
  out["conjecture_flagged"] = report.conjecture_flagged;
  out["max_thm2_tightness"] = witness_json(report.max_thm2_tightness);
  out["splits_checked"] = report.splits_checked;
  out["splits_skipped"] = report.splits_skipped;
  if (include_timing) out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

Json to_json(const ClimbResult& climb) {
  Json out = report_header("search");
  out["best_graph6"] = climb.best_graph6;
  out["best_ratio"] = climb.best_ratio;
  Json trace = Json::array();
  for (const ClimbStep& step : climb.trace) {
    trace.push_back({{"restart", step.restart}, {"step", step.step}, {"ratio", step.ratio}, {"graph6", step.graph6}});
  }
  out["trace"] = std::move(trace);
  return out;
}

namespace {

void newline(int depth, std::string& out) {
  out += '\n';
  out.append(static_cast<std::size_t>(2 * depth), ' ');
}

void write_json(const Json& value, int depth, std::string& out) {
  switch (value.type()) {
    case Json::value_t::object: {
      if (value.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1, out);
        out += Json(key).dump() + ": ";
        write_json(item, depth + 1, out);
      }
      newline(depth, out);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (value.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& item : value) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1, out);
        write_json(item, depth + 1, out);
      }
      newline(depth, out);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double x = value.get<double>();
      if (!std::isfinite(x)) {
        out += "null";
        return;
      }
      std::string text = number(x);
      if (text.find_first_of(".e") == std::string::npos) text += ".0";
      out += text;
      return;
    }
    default:
      out += value.dump();
  }
}

}  // namespace

std::string dump_report(const Json& doc) {
  std::string out;
  write_json(doc, 0, out);
  out += '\n';
  return out;
}

std::string csv_header() {
  return "graph6,n,m,lambda,s,ratio,stanley,thm1,zhang,nikiforov,conjecture,passed\n";
}

std::string csv_row(const GraphRow& row) {
  // graph6 bytes lie in 63..126, so the first field never needs quoting.
  std::string out = row.graph6;
  out += ',' + std::to_string(row.n) + ',' + std::to_string(row.m);
  for (double v : {row.lambda, row.s}) out += ',' + number(v);
  out += ',' + (row.ratio ? number(*row.ratio) : std::string());
  for (double v : {row.stanley, row.thm1, row.zhang, row.nikiforov, row.conjecture}) out += ',' + number(v);
  out += row.passed ? ",1\n" : ",0\n";
  return out;
}

}  // namespace spectra
