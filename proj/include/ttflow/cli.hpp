#pragma once

// Command-line surface: `traj`, `field`, `limits` and `plot` subcommands.
// Each command writes to a stream and returns the process exit code:
//   0 success, 2 invalid configuration, 3 start outside the region,
//   4 limit mode inconsistent with the diamond.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ttflow/spacetime.hpp"

namespace ttflow::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitOutOfRegion = 3;
inline constexpr int kExitSpecMismatch = 4;

struct TRange {
  double min = 0.0;
  double max = 0.0;
  int n = 0;
};

struct RunConfig {
  std::string subcommand;             // traj | field | limits | plot
  std::string region = "diamond";     // diamond | wedge
  double L = 1.0;
  double L1 = 0.0;
  double apex = 0.0;
  std::vector<NullPair> starts;       // in-plane (x0 + x1, x0 - x1)
  std::optional<TRange> t_range;
  std::optional<int> grid;
  double tol = 0.01;
  std::string mode;                   // minkowski | wedge (limits)
  std::string format;                 // csv | json | svg; empty selects the default
  std::string out;                    // empty writes to the output stream
  std::vector<double> hyperbolas;     // plot overlays x1'^2 - x0^2 = w^2
};

/// Parses "min:max:n". Throws ttflow::Error(InvalidArgument) on malformed input.
TRange parse_t_range(const std::string& text);
/// Parses "zp,zm".
NullPair parse_null_pair(const std::string& text);

/// `%.12e`.
std::string format_number(double value);

int cmd_traj(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_field(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_limits(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_plot(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.subcommand; honours config.out by writing a file.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full entry point: parses argv with CLI11 and runs.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace ttflow::cli
