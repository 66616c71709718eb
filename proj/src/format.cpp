#include "qiquad/format.hpp"

#include <array>
#include <charconv>
#include <cstdio>

namespace qiquad {

std::string shortest(double x) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string significant(double x, int digits) {
  std::array<char, 64> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.*e", digits - 1, x);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

}  // namespace qiquad
