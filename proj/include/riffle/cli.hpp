#ifndef RIFFLE_CLI_HPP
#define RIFFLE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace riffle::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInternal = 2;

inline constexpr const char* kArtifactVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// Runs the command line (args excludes the program name) and returns the
/// process exit code: 0 success, 1 validation error or failed verification,
/// 2 internal failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riffle::cli

#endif  // RIFFLE_CLI_HPP
