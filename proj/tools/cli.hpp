#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgr::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Entry point of the `sgradius` tool. Subcommands: radius, verify, boundary, table.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgr::cli
