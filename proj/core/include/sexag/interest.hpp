#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "sexag/metrology.hpp"
#include "sexag/rational.hpp"
#include "sexag/sexagesimal.hpp"

namespace sexag {

/// A loan: principal in sìla, dimensionless rate per compounding period,
/// and the period length in years (1 unless the text says otherwise;
/// 5 for the five-yearly silver loans).
struct LoanTerms {
  Quantity principal;
  Rational rate_per_period;
  Rational period_years = 1;
};

/// Outcome of compounding. The exact factor is (1+r)^n; the scribal
/// fields hold the rounded factor a scribe would substitute before
/// multiplying the principal, when rounding was requested.
struct AccumulationResult {
  Rational exact_total;  // sìla
  Rational exact_factor;
  std::optional<Rational> scribal_factor;
  std::optional<Rational> scribal_total; // sìla
};

/// Compounds terms.principal over n_periods. With scribal_places set,
/// also computes the factor rounded at that many base-60 fractional
/// places under scribal_mode, and the total it yields.
AccumulationResult accumulate(const LoanTerms& terms, unsigned n_periods,
                              std::optional<unsigned> scribal_places = std::nullopt,
                              RoundingMode scribal_mode = RoundingMode::ceiling);

/// total / (1+r)^n, exact. The principal x of (1+r)^n x = total.
Rational solve_principal(const Rational& total, const Rational& r, unsigned n);

/// An exact table of (argument, exponent) pairs for one base, in the
/// style of the Old Babylonian exponent tables: every entry satisfies
/// base^exponent = argument. Validated on construction.
class LogTable {
public:
  struct Entry {
    BigInt argument;
    unsigned exponent;
  };

  LogTable(int base, std::vector<Entry> entries);

  /// Base-2 arguments 1, 2, 4, ..., 2^20.
  static LogTable binary_default();

  int base() const noexcept { return base_; }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  /// The exponent listed for value. A miss throws NotInTableError
  /// carrying the nearest entries on both sides; there is no silent
  /// interpolation.
  unsigned lookup(const BigInt& value) const;

private:
  int base_;
  std::vector<Entry> entries_; // arguments strictly increasing
};

/// Extracts `logentry <base> <argument> <exponent>` lines from a
/// unit-table-style document (unit/numeral lines are skipped), one table
/// per base. Entries are sorted; duplicates and unsound entries throw.
std::vector<LogTable> load_log_tables(std::string_view document);

/// Decimal logarithm approximations carried as exact rationals, so that
/// every identity computed from them is an exact equality. log 5 is
/// derived as 1 - log 2, log 10 as 1.
class DecimalLogTable {
public:
  DecimalLogTable() = default;
  DecimalLogTable(Rational log_two, Rational log_three);

  const Rational& log_two() const noexcept { return log_two_; }
  const Rational& log_three() const noexcept { return log_three_; }
  Rational log_five() const { return Rational(1) - log_two_; }

private:
  Rational log_two_{301, 1000};
  Rational log_three_{477, 1000};
};

/// Sum of prime multiplicities of x weighted by the table logs, exact.
/// x must factor over {2, 3, 5} (times powers of 10); any other prime
/// throws UnsupportedPrimeError naming it.
Rational decimal_log(const Rational& x, const DecimalLogTable& table = {});

enum class DurationMethod {
  log_approx,
  table,
  interpolation,
  modern,
};

std::string_view to_string(DurationMethod method);

/// A duration answer. Interpolated solutions carry the bracketing years
/// and the months deducted from the upper year; both satisfy
/// years = bracket.second - months_deducted / months_per_year.
struct DurationSolution {
  DurationMethod method;
  Rational years;
  std::optional<std::pair<long, long>> bracket;
  std::optional<Rational> months_deducted;
};

/// Solves (base)^(x/period) = k by table lookup: x = period * log(k).
/// k must be a positive integer listed in the table and the bases must
/// agree.
DurationSolution solve_duration_table(const Rational& k, int base,
                                      const Rational& period_years,
                                      const LogTable& table);

/// Solves (1+r)^x = k as decimal_log(k) / decimal_log(1+r), an exact
/// rational of the tabulated approximations. Throws DomainError when the
/// rate's log vanishes.
DurationSolution solve_duration_log_approx(const Rational& k, const Rational& r,
                                           const DecimalLogTable& table = {});

/// Least n with (1+r)^n >= k, by exact comparison. exact reports a hit
/// (1+r)^n = k; otherwise (n-1, n) brackets k. Throws
/// HorizonExceededError when max_n periods do not reach k.
struct DurationScan {
  long n;
  bool exact;
};
DurationScan integer_duration_scan(const Rational& k, const Rational& r,
                                   long max_n = 1000);

/// The attested linear-interpolation method: bracket k between
/// consecutive years, divide the overshoot by the bracketing year's
/// monthly growth, and deduct that many months from the upper year.
/// All arithmetic exact.
DurationSolution solve_duration_interpolated(const Rational& k, const Rational& r,
                                             int months_per_year = 12,
                                             long max_n = 1000);

/// ln(k)/ln(1+r) evaluated in 50-digit floating point (relative error
/// far below 1e-12), then rounded to frac_places base-60 places,
/// nearest-half-up. frac_places is capped at 25 to stay within the
/// evaluation precision.
DurationSolution solve_duration_modern(const Rational& k, const Rational& r,
                                       unsigned frac_places);

} // namespace sexag
