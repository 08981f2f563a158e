// Command-line front end for the verification studies.
//
//   fracalg_cli --command verify-index-law --probe cos --alpha 0.5 --beta 0.5 --refine 2
//
// Exit codes: 0 all asserted invariants hold, 1 invariant failure,
// 2 configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fracalg/study.hpp"

namespace {

int fail_config(const std::string& message) {
  std::cerr << "fracalg_cli: " << message << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fractional integral verification studies"};
  app.option_defaults()->always_capture_default();

  fracalg::RunConfig cfg;
  std::string command = "integrate";
  std::string norm = "inf";
  std::string output = "csv";
  std::string out_file;
  double beta = 0.0;
  bool verbose = false;

  app.add_option("--command", command, "integrate, stieltjes, verify-index-law, verify-conjugation, "
                                       "verify-titchmarsh, continuity-scan, roots, norm-bound");
  app.add_option("--a", cfg.a, "Left endpoint");
  app.add_option("--b", cfg.b, "Right endpoint");
  app.add_option("--n", cfg.n, "Number of grid cells");
  app.add_option("--alpha", cfg.alpha, "Order (lower end of the scan for continuity-scan)");
  auto* beta_opt = app.add_option("--beta", beta, "Second order (upper end for continuity-scan)");
  app.add_option("--integrator", cfg.integrator, "identity, affine:c0,c1, exp, square, log1p, sinh");
  app.add_option("--probe", cfg.probe, "one, id, square, cos, exp, ramp(offset); 'f,g' pairs for titchmarsh");
  app.add_option("--norm", norm, "1, 2 or inf");
  app.add_option("--seed", cfg.seed, "Seed for the random studies");
  app.add_option("--output", output, "csv or json");
  app.add_option("--refine", cfg.refine, "Number of grid doublings");
  app.add_option("--m", cfg.m, "Root order for the roots study");
  app.add_option("--out-file", out_file, "Write the report here instead of stdout");
  app.add_flag("--verbose", verbose, "Print wall time to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.command = fracalg::parse_command(command);
    cfg.norm = fracalg::parse_norm(norm);
    cfg.output = fracalg::parse_output_format(output);
  } catch (const std::invalid_argument& e) {
    return fail_config(e.what());
  }
  if (beta_opt->count() > 0) cfg.beta = beta;

  const auto result = fracalg::run(cfg);
  if (result.exit_code == 2) return fail_config(result.diagnostic);

  const std::string bytes = fracalg::emit(result.report, cfg.output);
  if (out_file.empty()) {
    std::fwrite(bytes.data(), 1, bytes.size(), stdout);
  } else {
    std::ofstream os(out_file, std::ios::binary);
    if (!os) return fail_config("cannot open " + out_file);
    os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  if (verbose) std::cerr << "wall_time_ms=" << result.report.wall_time_ms << "\n";
  if (result.exit_code == 1) std::cerr << "fracalg_cli: invariant check failed\n";
  return result.exit_code;
}
