#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "steercorr/qstate.hpp"
#include "steercorr/verify.hpp"

namespace steercorr::app {

enum class Command { Analyze, Sweep, Verify, Oracle };
enum class OutputFormat { Csv, Json };
enum class Family { Werner, Grid, Random };

enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 1,
  kVerificationFailed = 2,
  kConvergenceFailed = 3,
};

struct RunConfig {
  Command command = Command::Analyze;
  std::optional<std::string> input_path;
  std::optional<Vector3> inline_c;
  std::optional<std::size_t> samples;
  std::optional<int> grid;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> out_path;
  Family family = Family::Random;
  double p_start = 0.0;
  double p_end = 1.0;
  double p_step = 0.01;
  // Grid family: "all" for the full lattice, or one of c1/c2/c3 for a line
  // through the origin along that axis.
  std::string axis = "all";
};

// Either a Bell-diagonal shorthand or a full matrix.
using StateInput = std::variant<CorrelationVector, DensityMatrix>;

// {"c": [c1, c2, c3]} or {"matrix": [[[re, im] x4] x4]}. Throws
// Error{ParseError} on malformed input and validation errors on invalid states.
StateInput parse_state(const nlohmann::json& doc);
StateInput load_state(const std::string& path);

// 12 significant digits, '.' separator, no locale; -0 prints as 0.
std::string format_number(double x);

inline constexpr const char* kSweepCsvHeader =
    "c1,c2,c3,F2,F3,S2,S3,C2,C3,residual14,residual17";

std::string sweep_csv(const std::vector<SweepRecord>& records);
nlohmann::json sweep_json(const std::vector<SweepRecord>& records);

// Sampled correlation vectors for a sweep family; one generator per call.
std::vector<CorrelationVector> sweep_points(const RunConfig& config);

struct CommandOutput {
  int exit_code = kSuccess;
  // Main payload (table or JSON); goes to --out or stdout.
  std::string payload;
  // Human-readable status lines; goes to stderr.
  std::string log;
};

CommandOutput analyze(const RunConfig& config);
CommandOutput sweep(const RunConfig& config);
CommandOutput verify(const RunConfig& config);
CommandOutput oracle(const RunConfig& config);

// Parses argv-style arguments (without the program name) and runs the
// command. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace steercorr::app
