// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padua::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kBadArguments = 2,
    kIoError = 3,
    kDataMismatch = 4,
};

/// Runs the command line given without the program name. Results go to out
/// (or the --output file), diagnostics and summaries to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace padua::cli
