#pragma once

#include <string>
#include <string_view>

namespace fanosim {

// Round-trip representation (%.17g); -0 is written as 0.
std::string format_double(double v);

// Fixed-point with `decimals` digits; values that round to zero print without a sign.
std::string format_fixed(double v, int decimals = 9);

// Whole-string parse; throws std::invalid_argument on trailing garbage or empty input.
double parse_double(std::string_view s);

}  // namespace fanosim
