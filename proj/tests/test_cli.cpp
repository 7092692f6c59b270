#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "aniso/cli/commands.hpp"

using namespace aniso;
using namespace aniso::cli;

namespace {

const std::string kData = ANISO_TEST_DATA;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "aniso");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args, int expected_code = kExitOk) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, expected_code) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Config, DefaultsAndOverrides) {
  const RunConfig cfg = parse_config(json::parse(R"({"layout": {"num_logical": 3},
      "couplings": {"uniform": {"jx": 2.0}, "edges": [{"edge": [2, 1], "jy": 0.3}]},
      "task": {"gate": "sz", "triplet": [4, 5, 6]}})"));
  EXPECT_EQ(cfg.num_logical, 3);
  EXPECT_EQ(cfg.uniform.jx, 2.0);
  EXPECT_EQ(cfg.uniform.jy, 0.5);
  ASSERT_EQ(cfg.edge_overrides.size(), 1u);
  EXPECT_EQ(cfg.edge_overrides[0].first, Edge(1, 2));
  EXPECT_EQ(cfg.edge_overrides[0].second.jx, 2.0);  // unspecified fields inherit the uniform value
  EXPECT_EQ(cfg.edge_overrides[0].second.jy, 0.3);
  EXPECT_EQ(make_device(cfg).couplings.at(Edge(1, 2)).jy, 0.3);
  EXPECT_EQ(cfg.task.gate, "sz");
  // The resolved echo parses back to the same configuration.
  EXPECT_EQ(to_json(parse_config(to_json(cfg))), to_json(cfg));
}

TEST(Config, RejectsInvalidDocuments) {
  for (const char* doc : {R"({"extra": 1})", R"({"layout": {"num_logical": 0}})",
                          R"({"couplings": {"uniform": {"jz": 1}}})", R"({"task": {"gate": "cnot"}})",
                          R"({"task": {"triplet": [3, 2, 1]}})", R"({"task": {"target_edge": [1, 4]}})",
                          R"({"task": {"bhc_n": [0]}})", R"({"tolerances": {"epsilon_timing": -1}})",
                          R"({"couplings": {"uniform": {"jx": "big"}}})", R"({"task": {"encoding": 6}})"}) {
    EXPECT_THROW(parse_config(json::parse(doc)), ConfigError) << doc;
  }
  EXPECT_THROW(load_config(kData + "/missing.json"), ConfigError);
}

TEST(Cli, ValidateReport) {
  const json r = run_json({"validate", "--config", kData + "/exact.json"});
  EXPECT_EQ(r["schema_version"], kSchemaVersion);
  EXPECT_EQ(r["task"], "validate");
  EXPECT_TRUE(r["pass"].get<bool>());
  for (const auto& [name, ok] : r["checks"].items()) EXPECT_TRUE(ok.get<bool>()) << name;
  EXPECT_EQ(r["inputs"]["couplings"]["uniform"]["jx"], 4.5);
}

TEST(Cli, ValidateFlagsCrossTerms) {
  const std::string path = ::testing::TempDir() + "/cross.json";
  std::ofstream(path) << R"({"couplings": {"uniform": {"jx": 3.0, "jy": 1.0, "jxy": 0.2}}})";
  const json r = run_json({"validate", "--config", path});
  EXPECT_TRUE(r["checks"]["flip_commutation_matches_cross_terms"].get<bool>());
  EXPECT_FALSE(r["warnings"].empty());
}

TEST(Cli, SynthesizeGates) {
  const json sy = run_json({"synthesize", "--config", kData + "/exact.json"});
  EXPECT_EQ(sy["outputs"]["gate_count"], 3);
  EXPECT_LE(sy["outputs"]["verification"]["distance_code_I"].get<double>(), 1e-10);
  const json sz = run_json({"synthesize", "--gate", "sz", "--phi", "-0.7853981633974483", "--config",
                            kData + "/exact.json"});
  EXPECT_EQ(sz["outputs"]["gate_count"], 5);
  EXPECT_EQ(sz["inputs"]["task"]["phi"], -0.7853981633974483);
  const json cz = run_json({"synthesize", "--gate", "cz", "--config", kData + "/exact.json"});
  EXPECT_EQ(cz["outputs"]["core_pulse_count"], 5);
  EXPECT_EQ(cz["outputs"]["gate_count"], 15);
  EXPECT_LE(cz["outputs"]["cz_distance"].get<double>(), 1e-9);
  const json core = run_json({"synthesize", "--gate", "cz", "--up-to-local", "--config", kData + "/exact.json"});
  EXPECT_EQ(core["outputs"]["gate_count"], 5);
}

TEST(Cli, Closure) {
  const json q = run_json({"closure", "--seed", "qutrit", "--config", kData + "/exact.json"});
  EXPECT_EQ(q["outputs"]["dimension"], 8);
  const json e = run_json({"closure", "--config", kData + "/exact.json"});
  EXPECT_EQ(e["outputs"]["dimension"], 3);
  EXPECT_EQ(e["outputs"]["cross_term_scan"].size(), 3u);
  const json over = run_json({"closure", "--seed", "qutrit", "--max-dim", "4", "--config", kData + "/exact.json"},
                             kExitResource);
  EXPECT_TRUE(over["outputs"].contains("error"));
}

TEST(Cli, BhcCsv) {
  const CliRun r = run({"bhc", "--n", "1,100,10000", "--format", "csv", "--config", kData + "/generic.json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "method,n,pulses,spectral_error,distance");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 4);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"synthesize", "--gate", "sz", "--config", kData + "/rational.json"}).code, kExitInfeasible);
  EXPECT_EQ(run({"validate", "--config", kData + "/bad_key.json"}).code, kExitConfig);
  EXPECT_EQ(run({"synthesize", "--gate", "bogus"}).code, kExitConfig);
  EXPECT_EQ(run({}).code, kExitConfig);
  EXPECT_EQ(run({"synthesize", "--gate", "cz", "--config", kData + "/rational.json"}).code, kExitConfig);
}

TEST(Cli, DeterministicOutputs) {
  const json a = run_json({"report", "--config", kData + "/generic.json"});
  const json b = run_json({"report", "--config", kData + "/generic.json"});
  EXPECT_EQ(a["outputs"], b["outputs"]);
  EXPECT_EQ(a["checks"], b["checks"]);
}

TEST(Cli, WritesOutFileAndReadsEnvironment) {
  const std::string out = ::testing::TempDir() + "/report.json";
  std::filesystem::remove(out);
  ::setenv("ANISO_CONFIG", (kData + "/exact.json").c_str(), 1);
  const CliRun r = run({"validate", "--out", out});
  ::unsetenv("ANISO_CONFIG");
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out);
  const json doc = json::parse(in);
  EXPECT_EQ(doc["inputs"]["couplings"]["uniform"]["jx"], 4.5);
}

TEST(Cli, ReportIncludesMatrices) {
  const json r = run_json({"report", "--include-matrices", "--config", kData + "/exact.json"}, kExitInfeasible);
  EXPECT_TRUE(r["outputs"].contains("code_matrices"));
  EXPECT_EQ(r["outputs"]["code_matrices"]["1-2"]["code_I"].size(), 4u);
}
