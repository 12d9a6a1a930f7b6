#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsym {

/// Process exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitIdentityFailure = 1,  ///< verify found a failing report, or volkenborn was not monotone
  kExitDomain = 2,           ///< bad flag or domain precondition
  kExitResource = 3,         ///< a size guard would be exceeded
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`; the return value is an ExitCode.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsym
