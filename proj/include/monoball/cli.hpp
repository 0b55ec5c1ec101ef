#pragma once

// Command-line front end. `cli_main` parses arguments and calls `run`; both
// write to caller-supplied streams so they can be driven from tests.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace monoball {

inline constexpr const char* kVersion = "0.1.0";

enum class Command { Basis, Norms, Verify, Decompose, Bound };
enum class OutputFormat { Json, Csv };

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kConfigError = 2;
inline constexpr int kIoError = 3;
}  // namespace exit_code

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::Verify;
  int max_degree = 6;
  std::uint64_t seed = 1;
  int trials = 50;
  std::string r_grid = "0.05:0.45:0.05";
  double tol = 1e-12;
  OutputFormat format = OutputFormat::Json;
  std::string out;    // empty: standard output
  std::string input;  // decompose only
  std::optional<std::pair<int, int>> quadrature;
  bool zero_f0 = false;  // bound only
};

/// "start:stop:step" -> start, start + step, ... <= stop (values rounded to 12 decimals).
/// Throws ConfigError on malformed input or values outside [0, 1/2).
std::vector<double> parse_r_grid(const std::string& spec);

/// "n_theta,n_phi"
std::pair<int, int> parse_quadrature(const std::string& spec);

/// Throws ConfigError when the config violates its invariants.
void validate(const RunConfig& config);

/// Executes one command. Reports go to `config.out` or `out`; diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace monoball
