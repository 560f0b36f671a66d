#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxbruhat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// Runs the coxbruhat command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace coxbruhat::cli
