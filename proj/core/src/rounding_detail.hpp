#pragma once

#include "sexag/rational.hpp"

namespace sexag::detail {

// b > 0 everywhere these are used. cpp_int division truncates toward
// zero, so fix up the negative case.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if (a % b != 0 && a < 0) {
    --q;
  }
  return q;
}

// round(|x| * scale) under mode, modes reading |x| (callers own the sign).
// nearest_half_up resolves ties upward in magnitude.
inline BigInt scaled_magnitude(const Rational& mag, const BigInt& scale,
                               RoundingMode mode) {
  BigInt n = mag.num() * scale;
  switch (mode) {
  case RoundingMode::floor:
    return floor_div(n, mag.den());
  case RoundingMode::ceiling:
    return -floor_div(-n, mag.den());
  case RoundingMode::nearest_half_up:
    return floor_div(2 * n + mag.den(), 2 * mag.den());
  }
  return 0;
}

// round(x * scale) with signed semantics: floor toward -inf, ceiling
// toward +inf, nearest ties away from zero.
inline BigInt scaled_signed(const Rational& x, const BigInt& scale,
                            RoundingMode mode) {
  if (!x.is_negative()) {
    return scaled_magnitude(x, scale, mode);
  }
  RoundingMode magnitude_mode = mode;
  if (mode == RoundingMode::floor) {
    magnitude_mode = RoundingMode::ceiling;
  } else if (mode == RoundingMode::ceiling) {
    magnitude_mode = RoundingMode::floor;
  }
  return -scaled_magnitude(x.abs(), scale, magnitude_mode);
}

} // namespace sexag::detail
