#ifndef CCSERIES_CLI_HPP_
#define CCSERIES_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace ccseries::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kOverCap = 3,
};

/// Largest n accepted by `table` and `coeff`.
inline constexpr int kMaxTableN = 20;

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccseries::cli

#endif  // CCSERIES_CLI_HPP_
