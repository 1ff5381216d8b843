#pragma once

#include <string>
#include <vector>

namespace qheis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
    int exit_code = kExitOk;
    std::string out; // complete document, or empty on failure
    std::string err;
};

/// Runs one command line (without the program name). Nothing is printed; the
/// caller decides where out/err go.
CommandResult run(const std::vector<std::string>& args);

} // namespace qheis::cli
