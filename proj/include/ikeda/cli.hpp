#pragma once

#include <iosfwd>

namespace ikeda {

/// Exit codes: 0 ok, 2 configuration/bound/parse error, 3 consistency failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitConsistency = 3;

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ikeda
