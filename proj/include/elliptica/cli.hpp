#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elliptica::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
/// A would-be counterexample: PureFail or a violated bound in a census, or a
/// stabilization threshold of 4 or more at eps = 1.
inline constexpr int kExitAlarm = 3;

/// Runs one command line (program name excluded) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elliptica::cli
