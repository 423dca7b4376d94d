// Process wrapper around run_cli; all logic lives in the library so tests
// can drive it in-process.
#include <cstdio>
#include <string>
#include <vector>

#include "cat2alg/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cat2alg::CliResult res = cat2alg::run_cli(args);
    std::fwrite(res.output.data(), 1, res.output.size(), stdout);
    return res.exit_code;
}
