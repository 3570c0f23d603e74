#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace convexdom::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumeric = 3;

/// Parses `args` (without the program name) and runs the selected subcommand.
/// Reports go to files under --out; summaries to `out`, errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace convexdom::cli
