#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "sexag/bigint.hpp"
#include "sexag/errors.hpp"

namespace sexag {

/// Rounding rule applied when a value is cut to a fixed number of
/// fractional places (in base 60 or base 10). nearest_half_up resolves
/// ties away from zero, i.e. a cut digit of 30 (base 60) or 5 (base 10)
/// rounds the magnitude up.
enum class RoundingMode {
  floor,
  ceiling,
  nearest_half_up,
};

std::string_view to_string(RoundingMode mode);

/// Exact signed rational in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1. This is the
/// universal value type of the library; every computation on it is exact.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt numerator, BigInt denominator);

  const BigInt& num() const noexcept { return num_; }
  const BigInt& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_ == 0; }
  bool is_negative() const noexcept { return num_ < 0; }
  bool is_integer() const noexcept { return den_ == 1; }

  /// -1, 0 or +1.
  int sign() const noexcept { return num_ < 0 ? -1 : num_ > 0 ? 1 : 0; }

  Rational operator-() const;
  Rational abs() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs); // throws DivisionByZeroError

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  // Canonical form makes fieldwise equality exact equality.
  friend bool operator==(const Rational& lhs, const Rational& rhs) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  /// 1/x; throws DivisionByZeroError on zero.
  Rational reciprocal() const;

  /// Largest integer <= x, exact.
  BigInt floor() const;
  /// Smallest integer >= x, exact.
  BigInt ceil() const;

  /// "p/q", or just "p" for integers.
  std::string to_fraction_string() const;

private:
  void canonicalize();

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// a^n by repeated squaring, exact. Negative n inverts; 0^n with n < 0
/// throws DivisionByZeroError. |n| is capped at 1'000'000 to bound the
/// size of the result.
Rational pow_int(const Rational& a, long long n);

/// True iff n = 2^a * 3^b * 5^c. Exactly these integers have terminating
/// reciprocals in base 60. Requires n >= 1.
bool is_regular(const BigInt& n);

/// 1/a for a with a regular numerator, so that the result has a
/// terminating base-60 expansion. Throws DivisionByZeroError on zero and
/// NonRegularError (naming the offending prime) otherwise.
Rational reciprocal_regular(const Rational& a);

/// Decimal rendering, mirroring the base-60 formatter: the exact
/// expansion when it terminates within max_places digits, otherwise the
/// expansion of the value rounded at max_places digits under mode.
struct FormattedDecimal {
  std::string text;
  bool exact = false;
};
FormattedDecimal format_decimal(const Rational& x, unsigned max_places,
                                RoundingMode mode);

/// Parses "123", "-4.5", ".25" into an exact rational. Used by tests and
/// diagnostics; sexagesimal notation has its own parser.
Rational from_decimal_string(std::string_view text);

} // namespace sexag
