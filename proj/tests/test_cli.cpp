#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "spectra/cli.hpp"
#include "spectra/report.hpp"

using namespace spectra;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("compute on K4") {
  const Run r = run({"compute", "--graph6", "C~"});
  REQUIRE(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  CHECK(doc["schema"] == "spectra-report/1");
  CHECK(doc["kind"] == "compute");
  CHECK(doc["n"] == 4);
  CHECK(doc["m"] == 6);
  CHECK(std::abs(doc["spectral"]["lambda"].get<double>() - 3.0) <= 1e-9);
  CHECK(doc["spectral"]["converged"] == true);
  CHECK(doc["spectral"]["vector"].size() == 4);
  CHECK(doc["two_step_residual"].get<double>() <= 1e-9);
}

TEST_CASE("compute reports non-convergence with exit 1") {
  const Run r = run({"compute", "--graph6", "Cs", "--max-iter", "1"});
  CHECK(r.code == kExitViolation);
  CHECK(Json::parse(r.out)["spectral"]["converged"] == false);
}

TEST_CASE("bounds on a star") {
  // K_{1,3}: graph6 "Cs" is edges 0-1, 0-2, 0-3.
  const Run r = run({"bounds", "--graph6", "Cs"});
  REQUIRE(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  CHECK(std::abs(doc["bounds"]["s"].get<double>() - 3.0) <= 1e-12);
  CHECK(std::abs(doc["bounds"]["thm1"].get<double>() - std::sqrt(2.0)) <= 1e-12);
  for (const auto& [name, value] : doc["checks"].items()) CHECK_MESSAGE(value == true, name);

  const Run human = run({"bounds", "--graph6", "Cs", "--format", "human"});
  CHECK(human.code == kExitOk);
  CHECK(human.out.find("s=3") != std::string::npos);
}

TEST_CASE("decompose") {
  const Run r = run({"decompose", "--graph6", "Cs"});
  REQUIRE(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["decomposition"]["d"] == 2);
}

TEST_CASE("scan exhaustive 5") {
  const Run r = run({"scan", "--exhaustive", "5", "--checks", "thm1,conjecture"});
  REQUIRE(r.code == kExitOk);
  const Json doc = Json::parse(r.out);
  CHECK(doc["graphs_scanned"] == 1024);
  CHECK(doc["violations"].empty());
  CHECK_FALSE(doc.contains("elapsed_seconds"));

  const Run again = run({"scan", "--exhaustive", "5", "--checks", "thm1,conjecture", "--parallelism", "3"});
  CHECK(again.out == r.out);
}

TEST_CASE("scan from stdin and families") {
  const Run r = run({"scan", "-", "--checks", "all"}, "C~\nDhc\n");
  REQUIRE(r.code == kExitOk);
  CHECK(Json::parse(r.out)["graphs_scanned"] == 2);

  const Run cs = run({"scan", "--family", "cs:6", "--checks", "thm1,thm2_all_splits"});
  CHECK(cs.code == kExitOk);
  CHECK(Json::parse(cs.out)["graphs_scanned"] == 21);

  const Run blow = run({"scan", "--family", "blowup:Cs:3", "--checks", "thm1"});
  CHECK(blow.code == kExitOk);
  CHECK(Json::parse(blow.out)["graphs_scanned"] == 3);

  const Run rnd1 = run({"scan", "--random", "12,20,10", "--seed", "4"});
  const Run rnd2 = run({"scan", "--random", "12,20,10", "--seed", "4"});
  CHECK(rnd1.code == kExitOk);
  CHECK(rnd1.out == rnd2.out);
}

TEST_CASE("usage errors exit 2 with a diagnostic") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"compute", "--bogus"},
           {"compute", "--graph6", "D?"},
           {"compute"},
           {"compute", "--graph6", "C~", "--edges", "x.txt"},
           {"compute", "--edges", "/nonexistent/edges.txt"},
           {"scan", "--file", "/nonexistent/graphs.g6"},
           {"scan", "--exhaustive", "5", "--random", "5,3,2"},
           {"scan", "--exhaustive", "5", "--checks", "bogus"},
           {"scan", "--exhaustive", "9"},
           {"compute", "--graph6", "C~", "--tol", "0"},
           {"gen", "--cs", "5,4"},
           {"gen"},
           {"blowup", "--graph6", "C~"},
           {"search", "--n", "2"},
           {}}) {
    const Run r = run(args);
    CHECK_MESSAGE(r.code == kExitUsage, r.out);
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help for every subcommand") {
  for (const char* sub : {"compute", "bounds", "decompose", "scan", "search", "blowup", "gen"}) {
    const Run r = run({sub, "--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find(sub) != std::string::npos);
  }
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("stdin yields an array of documents") {
  const Run r = run({"compute", "-"}, ">>graph6<<C~\nDhc\n");
  REQUIRE(r.code == kExitOk);
  const Json docs = Json::parse(r.out);
  REQUIRE(docs.is_array());
  CHECK(docs.size() == 2);
  CHECK(std::abs(docs[1]["spectral"]["lambda"].get<double>() - 2.0) <= 1e-9);
}

TEST_CASE("gen and blowup") {
  const Run cs = run({"gen", "--cs", "2,4", "--format", "human"});
  REQUIRE(cs.code == kExitOk);
  CHECK(cs.out == "C}\n");

  const Run edges = run({"gen", "--cs", "1,3", "--format", "edges"});
  CHECK(edges.out == "3 2\n0 1\n0 2\n");

  const Run gnm1 = run({"gen", "--gnm", "10,15", "--seed", "3"});
  const Run gnm2 = run({"gen", "--gnm", "10,15", "--seed", "3"});
  CHECK(gnm1.code == kExitOk);
  CHECK(gnm1.out == gnm2.out);
  CHECK(Json::parse(gnm1.out)["m"] == 15);

  const Run blow = run({"blowup", "--graph6", "A_", "--t", "2"});
  REQUIRE(blow.code == kExitOk);
  const Json doc = Json::parse(blow.out);
  CHECK(doc["n"] == 4);
  CHECK(doc["m"] == 4);
}

TEST_CASE("search is deterministic and within the proved bound") {
  const Run a = run({"search", "--n", "6", "--steps", "200", "--restarts", "2", "--seed", "9"});
  const Run b = run({"search", "--n", "6", "--steps", "200", "--restarts", "2", "--seed", "9"});
  REQUIRE(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(Json::parse(a.out)["best_ratio"].get<double>() <= 2.0 / 3.0);
}

TEST_CASE("report floats use 17 significant digits") {
  spectra::Json doc = {{"a", 0.1}, {"b", 3.0}, {"c", 7}, {"d", {1.5, nullptr}}, {"e", "x\"y"}, {"f", spectra::Json::object()}};
  CHECK(dump_report(doc) ==
        "{\n  \"a\": 0.10000000000000001,\n  \"b\": 3.0,\n  \"c\": 7,\n  \"d\": [\n    1.5,\n    null\n  ],\n"
        "  \"e\": \"x\\\"y\",\n  \"f\": {}\n}\n");
  CHECK(Json::parse(dump_report(doc))["a"].get<double>() == 0.1);
}
