// In-process entry point for the command line front end. The process
// wrapper in tools/ is a thin shell around run_cli so that tests can drive
// every subcommand without spawning.
#pragma once

#include <string>
#include <vector>

namespace cat2alg {

struct CliResult {
    int exit_code = 0;
    std::string output; // the report, exactly as printed to standard output
};

// Runs one subcommand; args exclude the program name. Never throws: any
// failure is rendered into the report with exit code 2 (input trouble) or
// 1 (a check failed). Reports are byte-identical for identical inputs.
CliResult run_cli(const std::vector<std::string>& args);

} // namespace cat2alg
