#pragma once

#include "cli_config.hpp"

namespace cli {

// Each command returns its process exit code (EXIT_OK / EXIT_AUDIT); input
// and numeric problems surface as config_error / numeric_error.
int cmd_sweep(const RunConfig& cfg);
int cmd_dynamics(const RunConfig& cfg);
int cmd_audit(const RunConfig& cfg);
int cmd_regime(const RunConfig& cfg);

}  // namespace cli
