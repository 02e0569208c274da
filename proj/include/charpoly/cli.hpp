#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charpoly::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;

/// Runs the command line (args excludes the program name). Reports go to
/// `out` (or --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charpoly::cli
