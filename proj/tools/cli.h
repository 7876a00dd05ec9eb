#ifndef MODRC_TOOLS_CLI_H_
#define MODRC_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace modrc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

/// Runs one invocation. `args` excludes the program name. Nothing is written
/// to `out` unless the command completes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modrc::cli

#endif  // MODRC_TOOLS_CLI_H_
