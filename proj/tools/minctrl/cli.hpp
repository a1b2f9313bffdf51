#ifndef MINCTRL_TOOLS_CLI_HPP
#define MINCTRL_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace minctrl::cli {

// Process exit codes.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitInfeasible = 1;  // not controllable / infeasible
inline constexpr int kExitInvalid = 2;     // malformed input, guard, precondition
inline constexpr int kExitInternal = 3;    // numeric or internal failure

// Environment variable naming the default rank backend.
inline constexpr const char* kBackendEnv = "MINCTRL_BACKEND";

// Runs one command. `args` excludes the program name. JSON payloads go to
// `out` unless an output path is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minctrl::cli

#endif  // MINCTRL_TOOLS_CLI_HPP
