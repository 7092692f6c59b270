#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "aniso/synth.hpp"

namespace aniso::cli {

using json = nlohmann::json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Tolerances {
  double epsilon_timing = 1e-4;
  double epsilon_fidelity = 1e-3;
  std::int64_t max_branch = kDefaultMaxBranch;
};

struct TaskParams {
  std::string gate = "sy";
  double phi = 1.5707963267948966;
  std::array<int, 3> triplet{1, 2, 3};
  std::array<int, 2> target_edge{1, 2};  // local edge whose symmetric block is rotated
  std::vector<std::int64_t> bhc_n{1, 10, 100, 1000, 10000};
  int encoding = 0;  // 0..2 code I, 3..5 code II, in enumeration order
  std::string seed = "encoded";
  int max_dim = 64;
  bool include_matrices = false;
  bool local_corrections = true;
};

struct RunConfig {
  int num_logical = 2;
  EdgeCouplings uniform{4.5, 0.5, 0.0, 0.0};
  std::vector<std::pair<Edge, EdgeCouplings>> edge_overrides;
  Tolerances tolerances;
  TaskParams task;
};

/// Parses the JSON config; absent fields keep their defaults, unknown keys
/// and invalid values raise ConfigError.
RunConfig parse_config(const json& doc);
RunConfig load_config(const std::string& path);

/// Resolved configuration including defaulted fields.
json to_json(const RunConfig& config);

Device make_device(const RunConfig& config);
LogicalEncoding selected_encoding(const RunConfig& config);

}  // namespace aniso::cli
