#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace betasat::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_parse = 2,
    exit_class = 3,
    exit_guard = 4,
    exit_sat = 10,
    exit_unsat = 20,
};

/// Runs one command line (without the program name). The report goes to
/// `out` as a single JSON object, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace betasat::cli
