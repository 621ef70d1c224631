#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bbi::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInsufficient = 2 };

/// Entry point of the bbi tool. Reports and CSV go to `out`, diagnostics to
/// `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// Convenience overload; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bbi::cli
