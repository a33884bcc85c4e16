#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mmaoi::cli {

inline constexpr const char* kToolName = "mmaoi";
inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kSuccess = 0, kValidationError = 1, kCheckFailure = 2 };

/// Runs one CLI invocation. `args` excludes the program name, e.g.
/// {"solve", "--gen", "aoi_sum", "--t1", "1", ...}. Reports go to `out`
/// unless an output path is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmaoi::cli
