#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace deloop::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// Runs one `deloop` invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace deloop::cli
