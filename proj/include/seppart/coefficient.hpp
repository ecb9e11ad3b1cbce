#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "seppart/error.hpp"

namespace seppart {

/// Exact series coefficient. 128-bit, overflow is reported, never wrapped.
using Coeff = __int128;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "coefficient addition");
  return out;
}

inline Coeff checked_sub(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "coefficient subtraction");
  return out;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "coefficient multiplication");
  return out;
}

inline std::string to_string(Coeff value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work on the unsigned magnitude so the minimum value is representable.
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(-(value + 1)) + 1
                                   : static_cast<unsigned __int128>(value);
  std::string digits;
  while (mag != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

inline bool fits_int64(Coeff value) {
  return value >= std::numeric_limits<std::int64_t>::min() &&
         value <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace seppart
