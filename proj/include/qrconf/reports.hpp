#pragma once
// Verification suites, parameter sweeps and exploration runs, rendered as
// JSON or CSV reports.

#include "qrconf/errors.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace qrconf {

enum class ScalarMode
{
  rational,
  real,
};

enum class ReportFormat
{
  json,
  csv,
};

struct RunConfig
{
  std::vector<std::string> h_values;
  int N = 2048;
  int M = 100;
  std::vector<int> cutoffs = {256, 512, 1024, 2048, 4096};
  ScalarMode mode = ScalarMode::rational;
  ReportFormat format = ReportFormat::json;
  /// Empty means standard output.
  std::string out;
};

/// Throws ConfigError on a malformed h, a bad ladder, or N < 10 M when the
/// run contracts over the pairing.
void validate(const RunConfig& config, bool contracts);

/// Exit statuses of the command line tool.
inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_config = 2;

struct Report
{
  nlohmann::json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  /// Schema tag written in the CSV comment line, e.g. "verify/1".
  std::string csv_schema;
  int exit_status = exit_pass;
};

Report run_verify(const RunConfig& config);
Report run_sweep(const RunConfig& config);
Report run_explore(const RunConfig& config);

std::string render(const Report& report, ReportFormat format);

/// Tool version echoed into every report.
std::string tool_version();

}  // namespace qrconf
