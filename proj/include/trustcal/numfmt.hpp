#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace trustcal {

// All emitted reals use 12 significant digits; parsing that back and
// re-serializing reproduces the same text.
inline std::string format_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Rounds to 12 significant digits (the value the serializers would emit).
inline double round_sig12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

}  // namespace trustcal
