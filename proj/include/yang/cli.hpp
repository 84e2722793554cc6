#ifndef YANG_CLI_HPP
#define YANG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace yang::cli {

/// Exit codes: 0 success / all checks pass, 1 failures found, 2 usage or parse error.
enum ExitCode : int { kOk = 0, kFailures = 1, kUsage = 2 };

/// Runs one command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace yang::cli

#endif
