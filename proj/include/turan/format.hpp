#pragma once

#include <cstdio>
#include <string>

namespace turan {

inline constexpr int kMachineDigits = 12;
inline constexpr int kHumanDigits = 7;

/// printf-style %.{digits}g.
inline std::string format_number(double x, int digits = kMachineDigits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

}  // namespace turan
