#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chaincodes {

/// Exit codes: 0 success or mathematical finding, 1 I/O or parse error, 2 validation error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 1;
inline constexpr int kExitValidation = 2;

/// Runs the command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chaincodes
