#pragma once

#include <string>

namespace qiquad {

/// Shortest decimal string that round-trips to the same double.
std::string shortest(double x);

/// Fixed count of significant digits in scientific notation.
std::string significant(double x, int digits);

}  // namespace qiquad
