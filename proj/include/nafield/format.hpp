#pragma once

#include <cstdio>
#include <string>

namespace nafield {

/// Fixed float rendering for all CLI output; golden files depend on it.
inline std::string fmt_e(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12e", x);
  return buf;
}

}  // namespace nafield
