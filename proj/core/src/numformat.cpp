#include "wlcull/numformat.hpp"

#include <charconv>
#include <cstdio>

namespace wlcull {

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_double(double value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value);
  return std::string(buf);
}

}  // namespace wlcull
