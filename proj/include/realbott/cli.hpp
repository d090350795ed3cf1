#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace realbott {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`. Returns 0 on success, 1 on a domain error, 2 on a
// usage error.
int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace realbott
