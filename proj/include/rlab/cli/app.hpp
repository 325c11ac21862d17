#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "rlab/cli/suites.hpp"

namespace rlab::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsageError = 2 };

// Parses argv and runs one subcommand.
int run(int argc, char** argv);
int run(const std::vector<std::string>& args);

// One JSON line per report, then a summary object embedding `config`.
std::string report_lines(const Reports& reps, const nlohmann::json& config);

// Fixed-width table for terminals.
std::string report_table(const Reports& reps);

}  // namespace rlab::cli
