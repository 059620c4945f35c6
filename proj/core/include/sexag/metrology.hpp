#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sexag/rational.hpp"

namespace sexag {

/// A capacity unit, grounded in sìla (~1 litre).
struct Unit {
  std::string name;
  Rational sila_equivalent; // sìla per unit, > 0
};

/// A numeral sign for a large round number (šár, šar'u, ...). The -gal
/// ("big") form of a sign is worth 60 times the base sign.
struct NumeralSymbol {
  std::string name;
  BigInt value; // > 0
};

/// A capacity amount. The magnitude is always carried in sìla; the
/// display unit is a hint taken from the source text, never a multiplier.
struct Quantity {
  Rational sila_magnitude;
  std::optional<std::string> display_unit;
};

/// Folds a name to its lookup key: ASCII lowercased, diacritics stripped
/// (š -> s, ì -> i, á -> a, ...), subscript digits mapped to plain digits,
/// apostrophes dropped. "gur₇", "gur7" and "GUR7" all collapse to "gur7".
std::string normalize_name(std::string_view name);

/// The active table of units and numerals. Immutable in normal use:
/// construct via builtin() or load_unit_table() and share freely.
class UnitSystem {
public:
  /// sìla = 1, bán = 10, PI = 60, gur = 300, gur₇ = 1152000;
  /// šár = 3600, šar'u = 36000, šár-gal = 216000, šar'u-gal = 2160000.
  static UnitSystem builtin();

  /// Adds or replaces a unit. The base unit sìla cannot be redefined.
  /// Throws DomainError on non-positive equivalents.
  void define_unit(Unit unit);
  /// Adds or replaces a numeral. Throws DomainError on non-positive values.
  void define_numeral(NumeralSymbol numeral);

  const Unit* find_unit(std::string_view name) const;
  const NumeralSymbol* find_numeral(std::string_view name) const;

  /// Like find_unit but throws DomainError for unknown names.
  const Unit& unit(std::string_view name) const;

  const std::vector<Unit>& units() const noexcept { return units_; }
  const std::vector<NumeralSymbol>& numerals() const noexcept { return numerals_; }

private:
  std::vector<Unit> units_;
  std::vector<NumeralSymbol> numerals_;
  std::unordered_map<std::string, std::size_t> unit_index_;    // normalized
  std::unordered_map<std::string, std::size_t> numeral_index_; // normalized
};

/// Parses a transliterated quantity: a sequence of count(symbol) or
/// "count symbol" terms, optionally followed by a bare unit name (a
/// display hint contributing nothing) and/or a commodity word (še,
/// ignored). Counted numerals contribute count * value sìla; counted
/// units contribute count * sila_equivalent. Throws ParseError on
/// unknown symbols and malformed counts.
Quantity parse_quantity(std::string_view text, const UnitSystem& system);

/// q expressed in the target unit, exact. Throws DomainError for
/// unknown units.
Rational convert(const Quantity& q, std::string_view target,
                 const UnitSystem& system);

/// interest / principal, dimensionless. Throws DivisionByZeroError on a
/// zero principal.
Rational rate_from_quantities(const Quantity& interest,
                              const Quantity& principal);

/// Parses a unit-table document and merges it over builtin(). One entry
/// per line:
///
///   unit <name> <sila_equivalent as integer or a/b>
///   numeral <name> <integer>
///
/// '#' starts a comment. logentry lines (see load_log_tables) are
/// accepted and skipped, so one file can describe units and log tables
/// together. Parse errors cite 1-based line numbers. Redefining sìla is
/// rejected.
UnitSystem load_unit_table(std::string_view document);

} // namespace sexag
