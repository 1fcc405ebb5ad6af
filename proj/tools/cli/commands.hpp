// commands.hpp: the driver's subcommands.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "output.hpp"

namespace qprobe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnconverged = 2;

const std::vector<std::string>& command_names();

struct CommandResult {
    int exit_code = kExitOk;
    Manifest manifest;
};

// Runs one subcommand, writing its files and manifest under cfg.run.output.
// Throws on invalid input or I/O failure.
CommandResult run_command(const std::string& name, const RunConfig& cfg, std::ostream& log);

// Quick end-to-end checks; returns true when all pass.
bool self_test(std::ostream& log);

// Analytic Legendre recurrence against the Lanczos result on Gauss-Legendre nodes.
bool legendre_check(std::ostream& log);

}  // namespace qprobe::cli
