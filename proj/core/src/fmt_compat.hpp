#pragma once

#include <cstdio>
#include <string>

namespace coplan {

// printf-style formatting into std::string for error messages.
template <typename... Args>
std::string StrFormat(const char* format, Args... args) {
  const int n = std::snprintf(nullptr, 0, format, args...);
  std::string out(n > 0 ? n : 0, '\0');
  if (n > 0) std::snprintf(out.data(), out.size() + 1, format, args...);
  return out;
}

}  // namespace coplan
