#ifndef SPECTRA_CLI_HPP
#define SPECTRA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace spectra {

/// Exit codes: 0 success, 1 a check failed (report still written),
/// 2 usage or input error (one-line diagnostic on `err`).
enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitUsage = 2 };

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace spectra

#endif  // SPECTRA_CLI_HPP
