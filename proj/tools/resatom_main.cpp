// resatom command-line front end: batch sweeps, trajectory runs, self
// audits, and regime reports over the shared-library C API.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cli_commands.hpp"
#include "cli_config.hpp"

namespace {

struct FlagValues {
  std::string config;
  std::string output;
  double r_min = 0.0;
  double r_max = 0.0;
  long long n_points = 0;
  std::uint64_t seed = 0;
  long long n_samples = 0;
  double dt = 0.0;
  double duration = 0.0;
};

// Flags override config keys of the same name (kebab-case flag, snake_case
// key); only flags the user actually passed take effect.
void add_common_options(CLI::App* cmd, FlagValues& vals, bool config_required) {
  auto* config_opt = cmd->add_option("--config", vals.config, "JSON configuration file");
  if (config_required) config_opt->required();
  cmd->add_option("--output", vals.output, "output path (default: stdout)");
  cmd->add_option("--r-min", vals.r_min, "override grid.r_min");
  cmd->add_option("--r-max", vals.r_max, "override grid.r_max");
  cmd->add_option("--n-points", vals.n_points, "override grid.n_points");
  cmd->add_option("--seed", vals.seed, "override mc.seed");
  cmd->add_option("--n-samples", vals.n_samples, "override mc.n_samples");
  cmd->add_option("--dt", vals.dt, "override time.dt");
  cmd->add_option("--duration", vals.duration, "override time.duration");
}

cli::Overrides collect_overrides(const CLI::App* cmd, const FlagValues& vals) {
  cli::Overrides ov;
  if (cmd->count("--output")) ov.output = vals.output;
  if (cmd->count("--r-min")) ov.r_min = vals.r_min;
  if (cmd->count("--r-max")) ov.r_max = vals.r_max;
  if (cmd->count("--n-points")) ov.n_points = vals.n_points;
  if (cmd->count("--seed")) ov.seed = vals.seed;
  if (cmd->count("--n-samples")) ov.n_samples = vals.n_samples;
  if (cmd->count("--dt")) ov.dt = vals.dt;
  if (cmd->count("--duration")) ov.duration = vals.duration;
  return ov;
}

int run_command(const std::string& name, const CLI::App* cmd, const FlagValues& vals) {
  const cli::RunConfig cfg = cli::parse_config(name, vals.config, collect_overrides(cmd, vals));
  if (name == "sweep") return cli::cmd_sweep(cfg);
  if (name == "dynamics") return cli::cmd_dynamics(cfg);
  if (name == "audit") return cli::cmd_audit(cfg);
  return cli::cmd_regime(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"resatom: two-level atoms in a resonant field -- potentials, dynamics, audits"};
  app.require_subcommand(1);

  FlagValues sweep_vals, dynamics_vals, audit_vals, regime_vals;
  CLI::App* sweep = app.add_subcommand("sweep", "evaluate a potential model over an r grid");
  add_common_options(sweep, sweep_vals, /*config_required=*/true);
  CLI::App* dynamics = app.add_subcommand("dynamics", "propagate a state and record populations");
  add_common_options(dynamics, dynamics_vals, /*config_required=*/true);
  CLI::App* audit = app.add_subcommand("audit", "run the built-in cross-checks");
  add_common_options(audit, audit_vals, /*config_required=*/false);
  CLI::App* regime = app.add_subcommand("regime", "weak-field, attenuation and exchange checks");
  add_common_options(regime, regime_vals, /*config_required=*/false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return cli::EXIT_CONFIG;
  }

  try {
    if (sweep->parsed()) return run_command("sweep", sweep, sweep_vals);
    if (dynamics->parsed()) return run_command("dynamics", dynamics, dynamics_vals);
    if (audit->parsed()) return run_command("audit", audit, audit_vals);
    return run_command("regime", regime, regime_vals);
  } catch (const cli::numeric_error& e) {
    std::cerr << e.what() << "\n";
    return cli::EXIT_NUMERIC;
  } catch (const cli::config_error& e) {
    std::cerr << e.what() << "\n";
    return cli::EXIT_CONFIG;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::EXIT_CONFIG;
  }
}
