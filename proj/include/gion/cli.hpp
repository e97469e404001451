#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gion::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command. `args` excludes the program name. Output goes to `out`
/// only on success; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gion::cli
