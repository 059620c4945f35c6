#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sexag/rational.hpp"

namespace sexag {

/// A parsed base-60 digit string. Grammar (canonical form is bit-exact):
///
///   [-] group ("," group)* [";" group ("," group)*]
///
/// where group is 1-2 decimal digits with value <= 59. The ";" is the
/// sexagesimal point; without it the literal is "floating" and its
/// magnitude is context-dependent.
struct SexLiteral {
  bool negative = false;
  std::vector<int> integer_digits;    // most significant first, never empty
  std::vector<int> fractional_digits; // empty unless has_point
  bool has_point = false;

  /// Canonical notation: no spaces, no leading zeros in groups.
  std::string to_string() const;
};

/// Parser guard; far beyond any attested text.
inline constexpr std::size_t kMaxLiteralGroups = 64;

/// Parses notation text. Throws ParseError on syntax violations and on
/// digit groups outside 0..59 (the offending group is reported).
SexLiteral parse_sex(std::string_view text);

/// sign * (sum of integer digits weighted by descending powers of 60
///         + sum of fractional digits weighted by 60^-1, 60^-2, ...).
/// Point-less literals read as integers; see enumerate_interpretations
/// for the historical floating readings.
Rational literal_value(const SexLiteral& lit);

/// All readings value * 60^k for k in [shift_min, shift_max], ascending.
/// This is the explicit surface for the ambiguity of point-less numbers
/// (a bare "30" may mean 0;30 as well as 30). Requires a point-less
/// literal and |shift| <= 8; violations throw DomainError.
std::vector<Rational> enumerate_interpretations(const SexLiteral& lit,
                                                int shift_min, int shift_max);

/// Nearest multiple of 60^-places under mode, exact. floor and ceiling
/// bound x; nearest_half_up resolves a cut digit of 30 away from zero.
Rational round_to_places(const Rational& x, unsigned places, RoundingMode mode);

/// Base-60 rendering. If x terminates within max_frac_places the exact
/// expansion is returned (exact = true, no padding zeros); otherwise the
/// expansion of round_to_places(x, max_frac_places, mode). Negative
/// values carry a leading minus. The text always re-parses to the
/// rounded value.
struct FormattedSex {
  std::string text;
  bool exact = false;
};
FormattedSex format_sex(const Rational& x, unsigned max_frac_places,
                        RoundingMode mode);

} // namespace sexag
