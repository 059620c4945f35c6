#include "sexag/interest.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace sexag {

std::string_view to_string(DurationMethod method) {
  switch (method) {
  case DurationMethod::log_approx:
    return "log-approx";
  case DurationMethod::table:
    return "table";
  case DurationMethod::interpolation:
    return "interpolation";
  case DurationMethod::modern:
    return "modern";
  }
  return "?";
}

AccumulationResult accumulate(const LoanTerms& terms, unsigned n_periods,
                              std::optional<unsigned> scribal_places,
                              RoundingMode scribal_mode) {
  if (terms.rate_per_period <= Rational(0)) {
    throw DomainError("rate_per_period must be positive");
  }
  if (terms.principal.sila_magnitude <= Rational(0)) {
    throw DomainError("principal must be positive");
  }
  if (terms.period_years <= Rational(0)) {
    throw DomainError("period_years must be positive");
  }

  AccumulationResult result;
  result.exact_factor =
      pow_int(Rational(1) + terms.rate_per_period, static_cast<long long>(n_periods));
  result.exact_total = terms.principal.sila_magnitude * result.exact_factor;
  if (scribal_places) {
    result.scribal_factor =
        round_to_places(result.exact_factor, *scribal_places, scribal_mode);
    result.scribal_total = terms.principal.sila_magnitude * *result.scribal_factor;
  }
  return result;
}

Rational solve_principal(const Rational& total, const Rational& r, unsigned n) {
  if (r <= Rational(0)) {
    throw DomainError("rate must be positive");
  }
  if (n == 0) {
    throw DomainError("period count must be positive");
  }
  return total / pow_int(Rational(1) + r, static_cast<long long>(n));
}

LogTable::LogTable(int base, std::vector<Entry> entries)
    : base_(base), entries_(std::move(entries)) {
  if (base_ < 2) {
    throw DomainError("log table base must be at least 2");
  }
  const BigInt big_base(base_);
  for (const Entry& entry : entries_) {
    if (boost::multiprecision::pow(big_base, entry.exponent) != entry.argument) {
      throw DomainError("unsound log table entry: " + std::to_string(base_) + "^" +
                        std::to_string(entry.exponent) +
                        " != " + entry.argument.str());
    }
  }
  for (size_t i = 1; i < entries_.size(); ++i) {
    if (!(entries_[i - 1].argument < entries_[i].argument)) {
      throw DomainError("log table arguments must be strictly increasing");
    }
  }
}

LogTable LogTable::binary_default() {
  std::vector<Entry> entries;
  BigInt argument = 1;
  for (unsigned e = 0; e <= 20; ++e) {
    entries.push_back({argument, e});
    argument *= 2;
  }
  return LogTable(2, std::move(entries));
}

unsigned LogTable::lookup(const BigInt& value) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), value,
      [](const Entry& entry, const BigInt& v) { return entry.argument < v; });
  if (it != entries_.end() && it->argument == value) {
    return it->exponent;
  }

  std::optional<NotInTableError::Entry> below, above;
  if (it != entries_.begin()) {
    const Entry& b = *std::prev(it);
    below = {b.argument, b.exponent};
  }
  if (it != entries_.end()) {
    above = {it->argument, it->exponent};
  }
  std::string message =
      value.str() + " is not in the base-" + std::to_string(base_) + " table";
  std::string neighbors;
  if (below) {
    neighbors += below->first.str() + " -> " + std::to_string(below->second);
  }
  if (above) {
    if (!neighbors.empty()) {
      neighbors += ", ";
    }
    neighbors += above->first.str() + " -> " + std::to_string(above->second);
  }
  if (!neighbors.empty()) {
    message += " (nearest entries: " + neighbors + ")";
  }
  throw NotInTableError(message, std::move(below), std::move(above));
}

std::vector<LogTable> load_log_tables(std::string_view document) {
  std::map<int, std::vector<LogTable::Entry>> per_base;

  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= document.size()) {
    size_t eol = document.find('\n', pos);
    std::string_view line = document.substr(
        pos, eol == std::string_view::npos ? eol : eol - pos);
    ++line_no;
    pos = eol == std::string_view::npos ? document.size() + 1 : eol + 1;

    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }

    std::vector<std::string_view> fields;
    size_t p = 0;
    while (p < line.size()) {
      while (p < line.size() && (line[p] == ' ' || line[p] == '\t')) {
        ++p;
      }
      size_t end = p;
      while (end < line.size() && line[end] != ' ' && line[end] != '\t') {
        ++end;
      }
      if (end > p) {
        fields.push_back(line.substr(p, end - p));
      }
      p = end;
    }
    if (fields.empty()) {
      continue;
    }
    if (fields[0] == "unit" || fields[0] == "numeral") {
      continue; // the unit-table loader's business
    }
    if (fields[0] != "logentry") {
      throw ParseError("line " + std::to_string(line_no) + ": unknown directive \"" +
                       std::string(fields[0]) + "\"");
    }
    if (fields.size() != 4) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected \"logentry <base> <argument> <exponent>\"");
    }
    auto parse_uint = [&](std::string_view text) -> BigInt {
      for (char c : text) {
        if (c < '0' || c > '9') {
          throw ParseError("line " + std::to_string(line_no) + ": bad integer \"" +
                           std::string(text) + "\"");
        }
      }
      if (text.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": bad integer");
      }
      return BigInt(std::string(text));
    };
    BigInt base = parse_uint(fields[1]);
    BigInt argument = parse_uint(fields[2]);
    BigInt exponent = parse_uint(fields[3]);
    if (base < 2 || base > 1'000'000 || exponent > 1'000'000) {
      throw ParseError("line " + std::to_string(line_no) + ": logentry out of range");
    }
    per_base[static_cast<int>(base)].push_back(
        {std::move(argument), static_cast<unsigned>(exponent)});
  }

  std::vector<LogTable> tables;
  tables.reserve(per_base.size());
  for (auto& [base, entries] : per_base) {
    std::sort(entries.begin(), entries.end(),
              [](const LogTable::Entry& a, const LogTable::Entry& b) {
                return a.argument < b.argument;
              });
    tables.emplace_back(base, std::move(entries));
  }
  return tables;
}

DecimalLogTable::DecimalLogTable(Rational log_two, Rational log_three)
    : log_two_(std::move(log_two)), log_three_(std::move(log_three)) {
  for (const Rational* v : {&log_two_, &log_three_}) {
    if (*v <= Rational(0) || *v >= Rational(1)) {
      throw DomainError("decimal log approximations must lie in (0, 1)");
    }
  }
}

namespace {

// Multiplicity of p in n, dividing it out.
long strip_factor(BigInt& n, int p) {
  long count = 0;
  while (n % p == 0) {
    n /= p;
    ++count;
  }
  return count;
}

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

Rational decimal_log(const Rational& x, const DecimalLogTable& table) {
  if (x <= Rational(0)) {
    throw DomainError("decimal log of a non-positive value");
  }

  long e2 = 0, e3 = 0, e5 = 0;
  for (int side = 0; side < 2; ++side) {
    BigInt part = side == 0 ? x.num() : x.den();
    long direction = side == 0 ? 1 : -1;
    e2 += direction * strip_factor(part, 2);
    e3 += direction * strip_factor(part, 3);
    e5 += direction * strip_factor(part, 5);
    if (part != 1) {
      BigInt bad = smallest_prime_factor(part);
      throw UnsupportedPrimeError(
          "cannot take the decimal log of " + x.to_fraction_string() +
              ": prime " + bad.str() + " is outside {2, 3, 5}",
          bad);
    }
  }

  // log 5 = 1 - log 2 (and log 10 = 1 falls out of the pair).
  return Rational(e2) * table.log_two() + Rational(e3) * table.log_three() +
         Rational(e5) * table.log_five();
}

DurationSolution solve_duration_table(const Rational& k, int base,
                                      const Rational& period_years,
                                      const LogTable& table) {
  if (base != table.base()) {
    throw DomainError("requested base " + std::to_string(base) +
                      " but the table is base " + std::to_string(table.base()));
  }
  if (period_years <= Rational(0)) {
    throw DomainError("period_years must be positive");
  }
  if (!k.is_integer() || k <= Rational(0)) {
    throw DomainError("unsupported argument " + k.to_fraction_string() +
                      ": the table method needs a positive integer growth multiple");
  }
  unsigned exponent = table.lookup(k.num());
  return {DurationMethod::table,
          period_years * Rational(static_cast<long long>(exponent)), std::nullopt,
          std::nullopt};
}

DurationSolution solve_duration_log_approx(const Rational& k, const Rational& r,
                                           const DecimalLogTable& table) {
  Rational rate_log = decimal_log(Rational(1) + r, table);
  if (rate_log.is_zero()) {
    throw DomainError("degenerate rate: the table gives log(1+r) = 0");
  }
  return {DurationMethod::log_approx, decimal_log(k, table) / rate_log,
          std::nullopt, std::nullopt};
}

DurationScan integer_duration_scan(const Rational& k, const Rational& r,
                                   long max_n) {
  if (r <= Rational(0)) {
    throw DomainError("rate must be positive");
  }
  if (k <= Rational(1)) {
    throw DomainError("growth multiple must exceed 1");
  }
  if (max_n < 1) {
    throw DomainError("scan horizon must be at least one period");
  }

  const Rational growth = Rational(1) + r;
  Rational factor(1);
  for (long n = 1; n <= max_n; ++n) {
    factor *= growth;
    if (factor == k) {
      return {n, true};
    }
    if (factor > k) {
      return {n, false};
    }
  }
  throw HorizonExceededError("(1+r)^" + std::to_string(max_n) + " = " +
                             factor.to_fraction_string() + " is still below k = " +
                             k.to_fraction_string());
}

DurationSolution solve_duration_interpolated(const Rational& k, const Rational& r,
                                             int months_per_year, long max_n) {
  if (months_per_year < 1) {
    throw DomainError("months_per_year must be at least 1");
  }

  DurationScan scan = integer_duration_scan(k, r, max_n);
  DurationSolution solution;
  solution.method = DurationMethod::interpolation;
  solution.bracket = {scan.n - 1, scan.n};
  if (scan.exact) {
    solution.years = Rational(scan.n);
    solution.months_deducted = Rational(0);
    return solution;
  }

  Rational upper = pow_int(Rational(1) + r, scan.n);
  Rational lower = upper / (Rational(1) + r);
  Rational overshoot = upper - k;
  Rational year_growth = upper - lower;
  Rational months = overshoot / (year_growth / Rational(months_per_year));
  solution.months_deducted = months;
  solution.years = Rational(scan.n) - months / Rational(months_per_year);
  return solution;
}

DurationSolution solve_duration_modern(const Rational& k, const Rational& r,
                                       unsigned frac_places) {
  if (r <= Rational(0)) {
    throw DomainError("rate must be positive");
  }
  if (k <= Rational(1)) {
    throw DomainError("growth multiple must exceed 1");
  }
  if (frac_places > 25) {
    throw DomainError("modern solver renders at most 25 fractional places");
  }

  using Float50 = boost::multiprecision::cpp_bin_float_50;
  auto to_float = [](const Rational& x) {
    return Float50(x.num()) / Float50(x.den());
  };
  Float50 years = log(to_float(k)) / log(to_float(Rational(1) + r));

  // years > 0 here, so half-up in magnitude is plain floor(x + 1/2).
  BigInt scale = boost::multiprecision::pow(BigInt(60), frac_places);
  Float50 scaled = years * Float50(scale) + Float50(0.5);
  BigInt rounded = boost::multiprecision::floor(scaled).convert_to<BigInt>();
  return {DurationMethod::modern, Rational(std::move(rounded), std::move(scale)),
          std::nullopt, std::nullopt};
}

} // namespace sexag
