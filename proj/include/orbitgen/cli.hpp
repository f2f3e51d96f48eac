#ifndef ORBITGEN_CLI_HPP
#define ORBITGEN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitgen::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1; // I/O errors, oracle mismatches, malformed input lines
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name) against the
/// given streams and returns the process exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace orbitgen::cli

#endif // ORBITGEN_CLI_HPP
