#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcplab::cli {

/// Exit codes: 0 success / Hamiltonian, 1 valid run with a negative answer, 2 error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcplab::cli
