#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mordell::cli {

// Exit codes: 0 success, 1 bound-check failure, 2 domain error, 64 usage.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBoundFailure = 1;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitUsage = 64;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mordell::cli
