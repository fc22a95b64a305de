#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace alcove {

using i64 = long long;
using i128 = __int128;

// Raised when an internal consistency check fails (corrupt data, broken
// invariant).  CLI maps this to exit code 3.
struct invariant_error : std::runtime_error {
  explicit invariant_error(const std::string& m) : std::runtime_error(m) {}
};

// Raised when a packaged data file is missing or fails verification.
// CLI maps this to exit code 4.
struct data_error : std::runtime_error {
  explicit data_error(const std::string& m) : std::runtime_error(m) {}
};

// Raised on unusable arguments (bad type label, unsupported rank).
// CLI maps this to exit code 2.
struct usage_error : std::runtime_error {
  explicit usage_error(const std::string& m) : std::runtime_error(m) {}
};

inline void check(bool ok, const std::string& msg) {
  if (!ok) throw invariant_error(msg);
}

inline std::string i128_str(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? -(unsigned __int128)v : (unsigned __int128)v;
  std::string s;
  while (u) { s += char('0' + (int)(u % 10)); u /= 10; }
  if (neg) s += '-';
  return std::string(s.rbegin(), s.rend());
}

} // namespace alcove
