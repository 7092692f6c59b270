#include "aniso/cli/config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace aniso::cli {

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double get_number(const json& obj, const char* key, double fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + "." + key + ": must be finite");
  return x;
}

std::int64_t get_integer(const json& obj, const char* key, std::int64_t fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
  return v.get<std::int64_t>();
}

EdgeCouplings parse_couplings(const json& obj, EdgeCouplings base, const std::string& where) {
  base.jx = get_number(obj, "jx", base.jx, where);
  base.jy = get_number(obj, "jy", base.jy, where);
  base.jxy = get_number(obj, "jxy", base.jxy, where);
  base.jyx = get_number(obj, "jyx", base.jyx, where);
  return base;
}

json couplings_json(const EdgeCouplings& c) { return {{"jx", c.jx}, {"jy", c.jy}, {"jxy", c.jxy}, {"jyx", c.jyx}}; }

template <std::size_t N>
std::array<int, N> get_int_array(const json& obj, const char* key, std::array<int, N> fallback,
                                 const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != N) {
    throw ConfigError(where + "." + key + ": expected an array of " + std::to_string(N) + " integers");
  }
  std::array<int, N> out{};
  for (std::size_t k = 0; k < N; ++k) {
    if (!v[k].is_number_integer()) throw ConfigError(where + "." + key + ": entries must be integers");
    out[k] = v[k].get<int>();
  }
  return out;
}

void parse_task(const json& t, TaskParams& task) {
  const std::string where = "task";
  reject_unknown(t, {"gate", "phi", "triplet", "target_edge", "bhc_n", "encoding", "seed", "max_dim",
                     "include_matrices", "local_corrections"},
                 where);
  if (t.contains("gate")) {
    if (!t["gate"].is_string()) throw ConfigError("task.gate: expected a string");
    task.gate = t["gate"].get<std::string>();
  }
  task.phi = get_number(t, "phi", task.phi, where);
  task.triplet = get_int_array<3>(t, "triplet", task.triplet, where);
  task.target_edge = get_int_array<2>(t, "target_edge", task.target_edge, where);
  if (t.contains("bhc_n")) {
    if (!t["bhc_n"].is_array()) throw ConfigError("task.bhc_n: expected an array of integers");
    task.bhc_n.clear();
    for (const auto& v : t["bhc_n"]) {
      if (!v.is_number_integer()) throw ConfigError("task.bhc_n: entries must be integers");
      task.bhc_n.push_back(v.get<std::int64_t>());
    }
  }
  task.encoding = static_cast<int>(get_integer(t, "encoding", task.encoding, where));
  if (t.contains("seed")) {
    if (!t["seed"].is_string()) throw ConfigError("task.seed: expected a string");
    task.seed = t["seed"].get<std::string>();
  }
  task.max_dim = static_cast<int>(get_integer(t, "max_dim", task.max_dim, where));
  for (const char* key : {"include_matrices", "local_corrections"}) {
    if (!t.contains(key)) continue;
    if (!t[key].is_boolean()) throw ConfigError(std::string("task.") + key + ": expected true or false");
  }
  task.include_matrices = t.value("include_matrices", task.include_matrices);
  task.local_corrections = t.value("local_corrections", task.local_corrections);
}

void check(const RunConfig& c) {
  if (c.num_logical < 1 || c.num_logical > 3) throw ConfigError("layout.num_logical must be 1, 2 or 3");
  const auto& tol = c.tolerances;
  if (!(tol.epsilon_timing > 0.0)) throw ConfigError("tolerances.epsilon_timing must be positive");
  if (!(tol.epsilon_fidelity > 0.0)) throw ConfigError("tolerances.epsilon_fidelity must be positive");
  if (tol.max_branch < 1) throw ConfigError("tolerances.max_branch must be positive");
  const auto& t = c.task;
  if (t.gate != "sy" && t.gate != "sz" && t.gate != "cz") throw ConfigError("task.gate must be sy, sz or cz");
  if (t.seed != "encoded" && t.seed != "qutrit" && t.seed != "code" && t.seed != "physical") {
    throw ConfigError("task.seed must be encoded, qutrit, code or physical");
  }
  if (t.encoding < 0 || t.encoding > 5) throw ConfigError("task.encoding must be in 0..5");
  if (t.max_dim < 1) throw ConfigError("task.max_dim must be positive");
  const int n = 3 * c.num_logical;
  for (int site : t.triplet) {
    if (site < 1 || site > n) throw ConfigError("task.triplet: site outside the register");
  }
  if (!(t.triplet[0] < t.triplet[1] && t.triplet[1] < t.triplet[2])) {
    throw ConfigError("task.triplet: sites must be strictly increasing");
  }
  const auto& e = t.target_edge;
  if (e[0] < 1 || e[1] > 3 || e[0] >= e[1]) throw ConfigError("task.target_edge must be a local edge [i,j], 1<=i<j<=3");
  for (std::int64_t n_rep : t.bhc_n) {
    if (n_rep < 1) throw ConfigError("task.bhc_n entries must be positive");
  }
  if (t.bhc_n.empty()) throw ConfigError("task.bhc_n must not be empty");
}

}  // namespace

RunConfig parse_config(const json& doc) {
  RunConfig cfg;
  reject_unknown(doc, {"layout", "couplings", "tolerances", "task"}, "config");
  if (doc.contains("layout")) {
    reject_unknown(doc["layout"], {"num_logical"}, "layout");
    cfg.num_logical = static_cast<int>(get_integer(doc["layout"], "num_logical", cfg.num_logical, "layout"));
  }
  if (doc.contains("couplings")) {
    const json& c = doc["couplings"];
    reject_unknown(c, {"uniform", "edges"}, "couplings");
    if (c.contains("uniform")) {
      reject_unknown(c["uniform"], {"jx", "jy", "jxy", "jyx"}, "couplings.uniform");
      cfg.uniform = parse_couplings(c["uniform"], cfg.uniform, "couplings.uniform");
    }
    if (c.contains("edges")) {
      if (!c["edges"].is_array()) throw ConfigError("couplings.edges: expected an array");
      for (const json& entry : c["edges"]) {
        reject_unknown(entry, {"edge", "jx", "jy", "jxy", "jyx"}, "couplings.edges[]");
        const auto ij = get_int_array<2>(entry, "edge", {0, 0}, "couplings.edges[]");
        if (ij[0] < 1 || ij[1] < 1 || ij[0] == ij[1]) throw ConfigError("couplings.edges[].edge: invalid pair");
        cfg.edge_overrides.emplace_back(Edge(ij[0], ij[1]), parse_couplings(entry, cfg.uniform, "couplings.edges[]"));
      }
    }
  }
  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    reject_unknown(t, {"epsilon_timing", "epsilon_fidelity", "max_branch"}, "tolerances");
    auto& tol = cfg.tolerances;
    tol.epsilon_timing = get_number(t, "epsilon_timing", tol.epsilon_timing, "tolerances");
    tol.epsilon_fidelity = get_number(t, "epsilon_fidelity", tol.epsilon_fidelity, "tolerances");
    tol.max_branch = get_integer(t, "max_branch", tol.max_branch, "tolerances");
  }
  if (doc.contains("task")) parse_task(doc["task"], cfg.task);
  check(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(doc);
}

json to_json(const RunConfig& config) {
  json edges = json::array();
  for (const auto& [edge, c] : config.edge_overrides) {
    json entry = couplings_json(c);
    entry["edge"] = {edge.i, edge.j};
    edges.push_back(entry);
  }
  const auto& t = config.task;
  return {
      {"layout", {{"num_logical", config.num_logical}}},
      {"couplings", {{"uniform", couplings_json(config.uniform)}, {"edges", edges}}},
      {"tolerances",
       {{"epsilon_timing", config.tolerances.epsilon_timing},
        {"epsilon_fidelity", config.tolerances.epsilon_fidelity},
        {"max_branch", config.tolerances.max_branch}}},
      {"task",
       {{"gate", t.gate},
        {"phi", t.phi},
        {"triplet", t.triplet},
        {"target_edge", t.target_edge},
        {"bhc_n", t.bhc_n},
        {"encoding", t.encoding},
        {"seed", t.seed},
        {"max_dim", t.max_dim},
        {"include_matrices", t.include_matrices},
        {"local_corrections", t.local_corrections}}},
  };
}

Device make_device(const RunConfig& config) {
  Device d = Device::uniform(config.num_logical, config.uniform);
  for (const auto& [edge, c] : config.edge_overrides) d.couplings.set(edge, c);
  return d;
}

LogicalEncoding selected_encoding(const RunConfig& config) {
  const auto& codes = standard_codes();
  const int idx = config.task.encoding;
  return enumerate_qubit_encodings(idx < 3 ? codes.even : codes.odd)[idx % 3];
}

}  // namespace aniso::cli
