#pragma once

#include <iosfwd>
#include <string>

#include "percycle/config.hpp"

namespace percycle::cli {

inline constexpr int exit_ok = 0;            // success / certified
inline constexpr int exit_error = 1;         // bad input or internal failure
inline constexpr int exit_not_certified = 2; // ran fine, conditions not met

// Executes one command ("check", "bounds", "certify", "solve", "simulate",
// "sweep") against a loaded config, writing the JSON report (CSV for
// simulate) to `out`. Returns the exit code; throws PercycleError only for
// errors, never for a negative verdict.
int run_command(const std::string& command, const Config& cfg,
                std::ostream& out);

// Full command-line entry: parses argv, loads the config (or the builtin
// when --config is omitted), applies --tau / --t-end / --seed overrides,
// runs the command, and maps PercycleError to an error object on stdout
// plus a one-line note on stderr. Never throws.
int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace percycle::cli
