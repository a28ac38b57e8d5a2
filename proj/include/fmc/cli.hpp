#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fmc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInvalidInput = 2;

/// Runs one `fmc` invocation. args excludes the program name. Exactly one
/// document goes to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmc::cli
