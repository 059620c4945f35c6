#include "sexag/rational.hpp"

#include <ostream>
#include <utility>

#include "rounding_detail.hpp"

namespace sexag {

using detail::floor_div;

std::string_view to_string(RoundingMode mode) {
  switch (mode) {
  case RoundingMode::floor:
    return "floor";
  case RoundingMode::ceiling:
    return "ceiling";
  case RoundingMode::nearest_half_up:
    return "nearest";
  }
  return "?";
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  canonicalize();
}

void Rational::canonicalize() {
  if (den_ == 0) {
    throw DivisionByZeroError("rational with zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational Rational::abs() const { return is_negative() ? -*this : *this; }

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) {
    throw DivisionByZeroError();
  }
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  canonicalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  BigInt l = lhs.num_ * rhs.den_;
  BigInt r = rhs.num_ * lhs.den_;
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const {
  if (is_zero()) {
    throw DivisionByZeroError("reciprocal of zero");
  }
  return Rational(den_, num_);
}

BigInt Rational::floor() const { return floor_div(num_, den_); }

BigInt Rational::ceil() const { return -floor_div(-num_, den_); }

std::string Rational::to_fraction_string() const {
  std::string s = num_.str();
  if (den_ != 1) {
    s += "/";
    s += den_.str();
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.to_fraction_string();
}

Rational pow_int(const Rational& a, long long n) {
  constexpr long long kMaxExponent = 1'000'000;
  if (n > kMaxExponent || n < -kMaxExponent) {
    throw DomainError("exponent magnitude exceeds " + std::to_string(kMaxExponent));
  }
  if (n == 0) {
    return Rational(1);
  }
  if (n < 0) {
    if (a.is_zero()) {
      throw DivisionByZeroError("zero raised to a negative power");
    }
    return pow_int(a.reciprocal(), -n);
  }
  // Numerator and denominator are coprime, so their powers are too.
  auto e = static_cast<unsigned>(n);
  return Rational(boost::multiprecision::pow(a.num(), e),
                  boost::multiprecision::pow(a.den(), e));
}

bool is_regular(const BigInt& n) {
  if (n < 1) {
    throw DomainError("regularity is defined for positive integers");
  }
  BigInt m = n;
  for (int p : {2, 3, 5}) {
    while (m % p == 0) {
      m /= p;
    }
  }
  return m == 1;
}

namespace {

// Smallest prime factor of m (m > 1), by trial division. Inputs here are
// residuals of desk-scale values; give up past the cap and report m itself.
BigInt smallest_prime_factor(const BigInt& m) {
  if (m % 2 == 0) return 2;
  for (BigInt p = 3; p * p <= m && p < 1'000'000; p += 2) {
    if (m % p == 0) {
      return p;
    }
  }
  return m;
}

} // namespace

Rational reciprocal_regular(const Rational& a) {
  if (a.is_zero()) {
    throw DivisionByZeroError("reciprocal of zero");
  }
  BigInt n = a.num() < 0 ? BigInt(-a.num()) : a.num();
  BigInt m = n;
  for (int p : {2, 3, 5}) {
    while (m % p == 0) {
      m /= p;
    }
  }
  if (m != 1) {
    BigInt bad = smallest_prime_factor(m);
    throw NonRegularError(n.str() + " is not regular (divisible by " + bad.str() +
                              "); its reciprocal does not terminate in base 60",
                          bad);
  }
  return a.reciprocal();
}

namespace {

BigInt pow10(unsigned places) {
  return boost::multiprecision::pow(BigInt(10), places);
}

} // namespace

FormattedDecimal format_decimal(const Rational& x, unsigned max_places,
                                RoundingMode mode) {
  // Mirrors format_sex: exact expansion iff den | 10^max_places,
  // otherwise the signed rounding at max_places digits.
  BigInt scale = pow10(max_places);
  bool exact = scale % x.den() == 0;
  BigInt scaled = exact ? BigInt(x.num() * (scale / x.den()))
                        : detail::scaled_signed(x, scale, mode);

  bool negative = scaled < 0;
  if (negative) {
    scaled = -scaled;
  }
  BigInt ipart = scaled / scale;
  BigInt fpart = scaled % scale;

  std::string digits;
  if (fpart != 0) {
    std::string raw = fpart.str();
    digits.assign(max_places - raw.size(), '0');
    digits += raw;
    while (!digits.empty() && digits.back() == '0') {
      digits.pop_back();
    }
  }

  std::string text;
  if (negative) {
    text += '-';
  }
  text += ipart.str();
  if (!digits.empty()) {
    text += '.';
    text += digits;
  }
  return {std::move(text), exact};
}

Rational from_decimal_string(std::string_view text) {
  size_t begin = text.find_first_not_of(" \t");
  size_t end = text.find_last_not_of(" \t");
  if (begin == std::string_view::npos) {
    throw ParseError("empty decimal literal");
  }
  text = text.substr(begin, end - begin + 1);

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  std::string ipart, fpart;
  size_t dot = text.find('.');
  if (dot == std::string_view::npos) {
    ipart = std::string(text);
  } else {
    ipart = std::string(text.substr(0, dot));
    fpart = std::string(text.substr(dot + 1));
    if (fpart.find('.') != std::string::npos) {
      throw ParseError("multiple decimal points");
    }
  }
  if (ipart.empty() && fpart.empty()) {
    throw ParseError("decimal literal without digits");
  }
  for (const std::string* part : {&ipart, &fpart}) {
    for (char c : *part) {
      if (c < '0' || c > '9') {
        throw ParseError(std::string("invalid character '") + c + "' in decimal literal");
      }
    }
  }

  BigInt value = ipart.empty() ? BigInt(0) : BigInt(ipart);
  BigInt scale = pow10(static_cast<unsigned>(fpart.size()));
  value *= scale;
  if (!fpart.empty()) {
    value += BigInt(fpart);
  }
  if (negative) {
    value = -value;
  }
  return Rational(value, scale);
}

} // namespace sexag
