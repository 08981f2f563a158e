#pragma once

// Verification studies behind the command-line tool. Each study composes
// library operations, fills a Report and decides pass/fail.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracalg/discretization.hpp"
#include "fracalg/probes.hpp"
#include "fracalg/report.hpp"

namespace fracalg {

enum class Command {
  integrate,
  stieltjes,
  verify_index_law,
  verify_conjugation,
  verify_titchmarsh,
  continuity_scan,
  roots,
  norm_bound,
};

Command parse_command(std::string_view text);
std::string_view to_string(Command c);
std::vector<std::string> command_names();

struct RunConfig {
  Command command = Command::integrate;
  double a = 0.0;
  double b = 1.0;
  std::size_t n = 64;
  double alpha = 0.5;
  std::optional<double> beta;
  std::string integrator = "exp";
  /// For verify-titchmarsh, "f,g" selects a pair; a single probe is paired with itself.
  std::string probe = "cos";
  NormKind norm = NormKind::linf;
  std::uint64_t seed = Lcg::default_seed;
  OutputFormat output = OutputFormat::csv;
  /// Number of grid doublings (step halvings for continuity-scan).
  unsigned refine = 2;
  /// Root order for the roots study.
  unsigned m = 2;
};

/// Raised for invalid configurations; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunResult {
  Report report;
  /// 0 pass, 1 invariant failure, 2 configuration error.
  int exit_code = 0;
  std::string diagnostic;
};

RunResult run(const RunConfig& config);

}  // namespace fracalg
