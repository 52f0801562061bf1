#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace silscope {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitInputError = 2;

/// Runs the command line `args` (without the program name). Results go to
/// `out` as JSON lines; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace silscope
