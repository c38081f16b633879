#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sti::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitWitness = 2;

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`; `in` backs "-" and missing inputs.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sti::cli
