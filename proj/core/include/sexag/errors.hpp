#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "sexag/bigint.hpp"

namespace sexag {

/// Input text that does not match a grammar: notation strings,
/// transliterations, expressions, table files. The CLI maps these to
/// exit code 2.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A well-formed request the mathematics cannot satisfy (division by
/// zero, non-regular reciprocal, missing table entry, ...). The CLI
/// maps these to exit code 3.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DivisionByZeroError : public DomainError {
public:
  DivisionByZeroError() : DomainError("division by zero") {}
  explicit DivisionByZeroError(const std::string& what) : DomainError(what) {}
};

/// Thrown when a terminating base-60 expansion is required of a value
/// whose factorization strays outside {2, 3, 5}.
class NonRegularError : public DomainError {
public:
  NonRegularError(const std::string& what, BigInt offending_prime)
      : DomainError(what), offending_prime_(std::move(offending_prime)) {}

  const BigInt& offending_prime() const noexcept { return offending_prime_; }

private:
  BigInt offending_prime_;
};

/// Lookup miss in an exponent table. Carries the nearest entries on
/// either side, when they exist, for diagnostics.
class NotInTableError : public DomainError {
public:
  using Entry = std::pair<BigInt, unsigned>; // (argument, exponent)

  NotInTableError(const std::string& what, std::optional<Entry> below,
                  std::optional<Entry> above)
      : DomainError(what), below_(std::move(below)), above_(std::move(above)) {}

  const std::optional<Entry>& below() const noexcept { return below_; }
  const std::optional<Entry>& above() const noexcept { return above_; }

private:
  std::optional<Entry> below_;
  std::optional<Entry> above_;
};

/// The growth target was not reached within the scan horizon.
class HorizonExceededError : public DomainError {
public:
  using DomainError::DomainError;
};

/// A decimal-log request whose factorization contains a prime the
/// table cannot express.
class UnsupportedPrimeError : public DomainError {
public:
  UnsupportedPrimeError(const std::string& what, BigInt prime)
      : DomainError(what), prime_(std::move(prime)) {}

  const BigInt& prime() const noexcept { return prime_; }

private:
  BigInt prime_;
};

} // namespace sexag
