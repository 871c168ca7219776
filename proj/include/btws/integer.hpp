#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace btws {

using Int = boost::multiprecision::cpp_int;

inline Int abs(Int const& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int r = a % b;
    a     = std::move(b);
    b     = std::move(r);
  }
  return a;
}

// Least nonnegative residue; modulus must be positive.
inline Int mod(Int const& a, Int const& m) {
  Int r = a % m;
  return r < 0 ? Int(r + m) : r;
}

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::string to_string(Int const& x) { return x.str(); }

inline bool fits_int64(Int const& x) {
  return x >= Int(INT64_MIN) && x <= Int(INT64_MAX);
}

}  // namespace btws
