#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crp::cli {

// Exit codes form the CLI contract.
inline constexpr int kOk = 0;
inline constexpr int kInconsistent = 1;
inline constexpr int kParseError = 2;
inline constexpr int kAntichainViolated = 3;
inline constexpr int kCounterexample = 4;
inline constexpr int kError = 5;

/// Runs one command. `args` excludes the binary name. Program input
/// named "-" is read from `in`. Normal output goes to `out`, buffered
/// and emitted in one piece; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

/// As above with standard input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace crp::cli
