#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ivhf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;       // I/O, parse, schema or domain error
inline constexpr int kExitNegative = 3;   // predicate evaluated to false

/// Runs the command line `args` (without the program name). Documents go to
/// `out` unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ivhf::cli
