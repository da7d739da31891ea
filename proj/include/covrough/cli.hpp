#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace covrough::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Results go to
/// out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace covrough::cli
