#ifndef RAINBOW_CLI_HPP
#define RAINBOW_CLI_HPP

#include <iosfwd>

namespace rainbow::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;      // bad flags, unreadable or malformed input
inline constexpr int kExitViolation = 2;  // a proven bound failed

/// Entry point of the `rainbow` tool. The JSON report goes to `out`, the
/// human-readable summary and errors to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rainbow::cli

#endif  // RAINBOW_CLI_HPP
