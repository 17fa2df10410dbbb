#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypermetric::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command; `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hypermetric::cli
