#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coinqubit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`;
/// usage errors (exit 1) and domain errors (exit 2, as
/// {"error":{"code":..,"message":..}}) go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coinqubit::cli
