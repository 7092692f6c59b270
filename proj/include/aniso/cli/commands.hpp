#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "aniso/cli/config.hpp"

namespace aniso::cli {

inline constexpr int kSchemaVersion = 1;

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitConfig = 2,
  kExitInfeasible = 3,
  kExitResource = 4,
};

struct Report {
  std::string task;
  json inputs;
  json outputs = json::object();
  json checks = json::object();
  std::vector<std::string> warnings;
  int exit_code = kExitOk;
  double wall_time_s = 0.0;

  bool pass() const { return exit_code == kExitOk; }
  /// Raises the exit code to `code` unless a more severe one is already set.
  void fail(int code);
  json to_json() const;
};

Report cmd_validate(const RunConfig& config);
Report cmd_synthesize(const RunConfig& config);
Report cmd_closure(const RunConfig& config);
Report cmd_bhc_study(const RunConfig& config);
Report cmd_report(const RunConfig& config);

/// Flattens a report into "key,value" CSV rows (the bhc table is emitted as a table).
std::string report_to_csv(const Report& report);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aniso::cli
