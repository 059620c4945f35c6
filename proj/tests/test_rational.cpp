#include "sexag/rational.hpp"

#include <random>

#include <gtest/gtest.h>

using namespace sexag;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-999, 999);
  std::uniform_int_distribution<int> den(1, 999);
  return Rational(num(rng), den(rng));
}

} // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(-3, -6), Rational(1, 2));
  EXPECT_EQ(Rational(3, -6), Rational(-1, 2));
  EXPECT_EQ(Rational(0, 5).den(), 1);
  EXPECT_EQ(Rational(0, 5).num(), 0);
  EXPECT_EQ(Rational(-4, 2).to_fraction_string(), "-2");
  EXPECT_THROW(Rational(1, 0), DivisionByZeroError);
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(1), Rational(-1));
  EXPECT_LE(Rational(2, 6), Rational(1, 3));
  EXPECT_LT(Rational(-1, 2), Rational(-1, 3));
}

TEST(Rational, ScribalFactorTimesPrincipal) {
  // 7;30 * 5,20,0,0 = 40,0,0,0
  EXPECT_EQ(Rational(15, 2) * Rational(1152000), Rational(8640000));
}

TEST(Rational, SubtractionExact) {
  EXPECT_EQ(Rational(256, 225) - Rational(1), Rational(31, 225));
}

TEST(Rational, AdditiveIdentity) {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    Rational x = random_rational(rng);
    EXPECT_EQ(x + Rational(0), x);
    EXPECT_EQ(x - x, Rational(0));
  }
}

TEST(Rational, Division) {
  // 0.875 / 0.125 = 7, the decimal-log duration estimate
  EXPECT_EQ(Rational(7, 8) / Rational(1, 8), Rational(7));
  EXPECT_EQ(Rational(100) / Rational(300), Rational(1, 3));
  EXPECT_THROW(Rational(1) / Rational(0), DivisionByZeroError);

  std::mt19937 rng(8);
  for (int i = 0; i < 100; ++i) {
    Rational x = random_rational(rng);
    if (!x.is_zero()) {
      EXPECT_EQ(x / x, Rational(1));
    }
  }
}

TEST(Rational, FieldLaws) {
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    Rational a = random_rational(rng);
    Rational b = random_rational(rng);
    Rational c = random_rational(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Rational, PowInt) {
  EXPECT_EQ(pow_int(Rational(4, 3), 7), Rational(16384, 2187));
  EXPECT_EQ(pow_int(Rational(6, 5), 3), Rational(216, 125));
  EXPECT_EQ(pow_int(Rational(2), -3), Rational(1, 8));
  EXPECT_THROW(pow_int(Rational(0), -1), DivisionByZeroError);

  std::mt19937 rng(10);
  for (int i = 0; i < 50; ++i) {
    Rational x = random_rational(rng);
    if (!x.is_zero()) {
      EXPECT_EQ(pow_int(x, 0), Rational(1));
    }
  }
}

TEST(Rational, PowIntAddsExponents) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long long> exp(-5, 5);
  for (int i = 0; i < 100; ++i) {
    Rational a = random_rational(rng);
    if (a.is_zero()) {
      continue;
    }
    long long m = exp(rng), n = exp(rng);
    EXPECT_EQ(pow_int(a, m + n), pow_int(a, m) * pow_int(a, n));
  }
}

TEST(Rational, IsRegular) {
  EXPECT_TRUE(is_regular(BigInt(2187))); // 3^7
  EXPECT_TRUE(is_regular(BigInt(1)));
  EXPECT_FALSE(is_regular(BigInt(7)));
  EXPECT_TRUE(is_regular(BigInt(60)));
  EXPECT_FALSE(is_regular(BigInt(61)));
  EXPECT_THROW(is_regular(BigInt(0)), DomainError);
}

TEST(Rational, ReciprocalRegular) {
  EXPECT_EQ(reciprocal_regular(Rational(216, 125)), Rational(125, 216));
  EXPECT_EQ(reciprocal_regular(Rational(2)), Rational(1, 2));
  EXPECT_THROW(reciprocal_regular(Rational(0)), DivisionByZeroError);

  try {
    reciprocal_regular(Rational(7));
    FAIL() << "expected NonRegularError";
  } catch (const NonRegularError& e) {
    EXPECT_EQ(e.offending_prime(), 7);
  }
  try {
    reciprocal_regular(Rational(14, 3)); // numerator 2 * 7
    FAIL() << "expected NonRegularError";
  } catch (const NonRegularError& e) {
    EXPECT_EQ(e.offending_prime(), 7);
  }
}

TEST(Rational, ReciprocalInverseLaw) {
  std::mt19937 rng(12);
  std::uniform_int_distribution<int> e2(0, 5), e3(0, 3), e5(0, 2);
  std::uniform_int_distribution<int> den(1, 999);
  for (int i = 0; i < 100; ++i) {
    BigInt num = boost::multiprecision::pow(BigInt(2), e2(rng)) *
                 boost::multiprecision::pow(BigInt(3), e3(rng)) *
                 boost::multiprecision::pow(BigInt(5), e5(rng));
    Rational a(num, den(rng));
    EXPECT_EQ(a * reciprocal_regular(a), Rational(1));
  }
}

TEST(Rational, FormatDecimal) {
  auto half = format_decimal(Rational(15, 2), 20, RoundingMode::floor);
  EXPECT_EQ(half.text, "7.5");
  EXPECT_TRUE(half.exact);

  auto third = format_decimal(Rational(1, 3), 5, RoundingMode::floor);
  EXPECT_EQ(third.text, "0.33333");
  EXPECT_FALSE(third.exact);

  auto third_up = format_decimal(Rational(1, 3), 5, RoundingMode::ceiling);
  EXPECT_EQ(third_up.text, "0.33334");

  auto neg = format_decimal(Rational(-1, 4), 20, RoundingMode::floor);
  EXPECT_EQ(neg.text, "-0.25");
  EXPECT_TRUE(neg.exact);

  EXPECT_EQ(format_decimal(Rational(0), 20, RoundingMode::floor).text, "0");
}

TEST(Rational, FromDecimalString) {
  EXPECT_EQ(from_decimal_string("7.5"), Rational(15, 2));
  EXPECT_EQ(from_decimal_string("-0.25"), Rational(-1, 4));
  EXPECT_EQ(from_decimal_string(".5"), Rational(1, 2));
  EXPECT_EQ(from_decimal_string("42"), Rational(42));
  EXPECT_THROW(from_decimal_string(""), ParseError);
  EXPECT_THROW(from_decimal_string("1.2.3"), ParseError);
  EXPECT_THROW(from_decimal_string("abc"), ParseError);

  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    Rational x = random_rational(rng);
    auto rendered = format_decimal(x, 40, RoundingMode::floor);
    if (rendered.exact) {
      EXPECT_EQ(from_decimal_string(rendered.text), x);
    }
  }
}
