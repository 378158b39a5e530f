#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace surfalg::cli {

inline constexpr int kOk = 0;
inline constexpr int kFalse = 1;
inline constexpr int kUnknown = 2;
inline constexpr int kUsage = 64;
inline constexpr int kData = 65;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace surfalg::cli
