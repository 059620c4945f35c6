#include "sexag/sexagesimal.hpp"

#include <utility>

#include "rounding_detail.hpp"

namespace sexag {

namespace {

BigInt pow60(unsigned places) {
  return boost::multiprecision::pow(BigInt(60), places);
}

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) {
    return {};
  }
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// One side of the point: group ("," group)*. group = 1-2 decimal digits,
// value <= 59.
std::vector<int> parse_digit_groups(std::string_view side) {
  std::vector<int> digits;
  size_t pos = 0;
  while (true) {
    size_t comma = side.find(',', pos);
    std::string_view group =
        side.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    if (group.empty()) {
      throw ParseError("empty digit group");
    }
    if (group.size() > 2) {
      throw ParseError("malformed digit group \"" + std::string(group) +
                       "\" (groups are 1-2 decimal digits)");
    }
    int value = 0;
    for (char c : group) {
      if (c < '0' || c > '9') {
        throw ParseError("invalid character '" + std::string(1, c) +
                         "' in digit group");
      }
      value = value * 10 + (c - '0');
    }
    if (value > 59) {
      throw ParseError("malformed digit group \"" + std::string(group) +
                       "\" (digits run 0..59)");
    }
    digits.push_back(value);
    if (comma == std::string_view::npos) {
      break;
    }
    pos = comma + 1;
  }
  return digits;
}

} // namespace

std::string SexLiteral::to_string() const {
  std::string out;
  if (negative) {
    out += '-';
  }
  for (size_t i = 0; i < integer_digits.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += std::to_string(integer_digits[i]);
  }
  if (has_point && !fractional_digits.empty()) {
    out += ';';
    for (size_t i = 0; i < fractional_digits.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += std::to_string(fractional_digits[i]);
    }
  }
  return out;
}

SexLiteral parse_sex(std::string_view text) {
  std::string_view body = trim(text);
  if (body.empty()) {
    throw ParseError("empty sexagesimal literal");
  }

  SexLiteral lit;
  if (body.front() == '-') {
    lit.negative = true;
    body.remove_prefix(1);
    if (body.empty()) {
      throw ParseError("sign without digits");
    }
  }

  size_t point = body.find(';');
  if (point != std::string_view::npos &&
      body.find(';', point + 1) != std::string_view::npos) {
    throw ParseError("multiple sexagesimal points");
  }

  lit.integer_digits = parse_digit_groups(
      point == std::string_view::npos ? body : body.substr(0, point));
  if (point != std::string_view::npos) {
    lit.has_point = true;
    lit.fractional_digits = parse_digit_groups(body.substr(point + 1));
  }

  if (lit.integer_digits.size() + lit.fractional_digits.size() > kMaxLiteralGroups) {
    throw ParseError("literal exceeds " + std::to_string(kMaxLiteralGroups) +
                     " digit groups");
  }
  if (lit.integer_digits.front() == 0 && lit.integer_digits.size() > 1) {
    throw ParseError("leading zero digit group");
  }
  return lit;
}

Rational literal_value(const SexLiteral& lit) {
  BigInt ipart = 0;
  for (int d : lit.integer_digits) {
    ipart = ipart * 60 + d;
  }
  BigInt fnum = 0;
  for (int d : lit.fractional_digits) {
    fnum = fnum * 60 + d;
  }
  auto fscale = pow60(static_cast<unsigned>(lit.fractional_digits.size()));
  BigInt num = ipart * fscale + fnum;
  if (lit.negative) {
    num = -num;
  }
  return Rational(std::move(num), std::move(fscale));
}

std::vector<Rational> enumerate_interpretations(const SexLiteral& lit,
                                                int shift_min, int shift_max) {
  if (lit.has_point) {
    throw DomainError("literal \"" + lit.to_string() +
                      "\" has a sexagesimal point; only point-less literals float");
  }
  if (shift_min > shift_max) {
    throw DomainError("empty shift range");
  }
  if (shift_min < -8 || shift_max > 8) {
    throw DomainError("shift range exceeds |k| <= 8");
  }

  Rational base_value = literal_value(lit);
  std::vector<Rational> readings;
  readings.reserve(static_cast<size_t>(shift_max - shift_min + 1));
  for (int k = shift_min; k <= shift_max; ++k) {
    readings.push_back(base_value * pow_int(Rational(60), k));
  }
  return readings;
}

Rational round_to_places(const Rational& x, unsigned places, RoundingMode mode) {
  BigInt scale = pow60(places);
  if (scale % x.den() == 0) {
    return x; // already a multiple of 60^-places
  }
  BigInt scaled = detail::scaled_signed(x, scale, mode);
  return Rational(std::move(scaled), std::move(scale));
}

FormattedSex format_sex(const Rational& x, unsigned max_frac_places,
                        RoundingMode mode) {
  // The expansion terminates within the budget iff den | 60^places;
  // otherwise render round_to_places(x), so the text always re-parses
  // to the rounded value.
  BigInt scale = pow60(max_frac_places);
  bool exact = scale % x.den() == 0;
  Rational value = exact ? x : round_to_places(x, max_frac_places, mode);

  BigInt scaled = value.num() * (scale / value.den());
  bool negative = scaled < 0;
  if (negative) {
    scaled = -scaled;
  }
  BigInt ipart = scaled / scale;
  BigInt fpart = scaled % scale;

  std::vector<int> idigits;
  while (ipart > 0) {
    idigits.push_back(static_cast<int>(ipart % 60));
    ipart /= 60;
  }
  if (idigits.empty()) {
    idigits.push_back(0);
  }

  std::vector<int> fdigits(max_frac_places, 0);
  for (size_t i = max_frac_places; i-- > 0 && fpart > 0;) {
    fdigits[i] = static_cast<int>(fpart % 60);
    fpart /= 60;
  }
  while (!fdigits.empty() && fdigits.back() == 0) {
    fdigits.pop_back();
  }

  std::string text;
  if (negative) {
    text += '-';
  }
  for (size_t i = idigits.size(); i-- > 0;) {
    text += std::to_string(idigits[i]);
    if (i > 0) {
      text += ',';
    }
  }
  for (size_t i = 0; i < fdigits.size(); ++i) {
    text += i == 0 ? ';' : ',';
    text += std::to_string(fdigits[i]);
  }
  return {std::move(text), exact};
}

} // namespace sexag
