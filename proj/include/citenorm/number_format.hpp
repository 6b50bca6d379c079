#pragma once

#include <string>

namespace citenorm {

// Shortest decimal text that parses back to exactly `value`.
std::string format_roundtrip(double value);

// Fixed-point text with `digits` decimals, rounding half away from zero.
// Rounding is applied to the shortest round-trip decimal form of the value,
// so 8.725 displays as 8.73 even though its binary double lies just below.
std::string format_fixed(double value, int digits);

// Numeric value of format_fixed(value, digits).
double round_half_away(double value, int digits);

}  // namespace citenorm
