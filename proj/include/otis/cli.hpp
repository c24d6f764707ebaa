#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "otis/analytics.hpp"

namespace otis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Default and maximum dimension for `verify`.
inline constexpr int kDefaultVerifyDepth = 5;

/// Decimal rendering of q with `places` digits, rounding halves away from zero.
std::string format_decimal(const Rational& q, int places);

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace otis::cli
