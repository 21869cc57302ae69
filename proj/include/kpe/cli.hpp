#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kpe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Name of the environment variable holding the default config file path.
inline constexpr const char* kConfigEnv = "KPE_CONFIG";

/// Runs one subcommand. `args` excludes the program name. Results go to `out`,
/// logs and diagnostics to `err`; `in` is read when a path is "-".
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace kpe::cli
