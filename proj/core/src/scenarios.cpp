#include "sexag/scenarios.hpp"

#include "sexag/expr.hpp"
#include "sexag/interest.hpp"
#include "sexag/metrology.hpp"
#include "sexag/rational.hpp"
#include "sexag/sexagesimal.hpp"

namespace sexag {

bool ScenarioReport::passed() const {
  for (const ReportLine& line : lines) {
    if (!line.ok) {
      return false;
    }
  }
  return true;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"enmetena", "ybc4669", "vat8528",
                                                 "ao6770"};
  return names;
}

namespace {

void push(ScenarioReport& report, std::string label, std::string expected,
          std::string actual) {
  bool ok = expected == actual;
  report.lines.push_back(
      {std::move(label), std::move(expected), std::move(actual), ok});
}

std::string sex(const Rational& x) {
  return format_sex(x, 20, RoundingMode::floor).text;
}

// The Enmetena foundation cone: 1 gur₇ of barley lent at the customary
// one-third per year grows to 40,0,0,0 sìla, i.e. the scribe compounded
// seven years with the rounded factor 7;30 and was repaid 10 gur₇ a year
// later.
ScenarioReport scenario_enmetena() {
  ScenarioReport report;
  report.name = "enmetena";
  report.title = "barley loan of 1 gur₇ repaid as 40,0,0,0 sìla";

  UnitSystem system = UnitSystem::builtin();
  Quantity principal = parse_quantity("1(gur₇)", system);
  Quantity total = parse_quantity("4(šar'u-gal) gur₇", system);
  push(report, "principal (sìla)", "1152000",
       principal.sila_magnitude.to_fraction_string());
  push(report, "principal (sexagesimal sìla)", "5,20,0,0",
       sex(principal.sila_magnitude));
  push(report, "recorded total (sìla)", "8640000",
       total.sila_magnitude.to_fraction_string());

  // The customary barley rate: 1 PI 4 bán per gur.
  Rational rate = rate_from_quantities(parse_quantity("1(PI) 4(bán)", system),
                                       parse_quantity("1(gur)", system));
  push(report, "rate per year", "1/3", rate.to_fraction_string());

  Rational k = total.sila_magnitude / principal.sila_magnitude;
  push(report, "growth multiple", "15/2", k.to_fraction_string());
  DurationSolution duration = solve_duration_log_approx(k, rate);
  push(report, "duration by decimal logs (years)", "7",
       duration.years.to_fraction_string());

  LoanTerms terms{principal, rate, Rational(1)};
  AccumulationResult seven =
      accumulate(terms, 7, /*scribal_places=*/1, RoundingMode::ceiling);
  push(report, "exact factor (1 + 1/3)^7", "7;29,29,32,50,22,13,20",
       sex(seven.exact_factor));
  push(report, "scribal factor (ceiling at 1 place)", "7;30",
       sex(*seven.scribal_factor));
  push(report, "scribal total (sìla)", "40,0,0,0", sex(*seven.scribal_total));
  push(report, "scribal total (gur₇)", "7;30",
       sex(convert({*seven.scribal_total, std::nullopt}, "gur₇", system)));

  AccumulationResult repayment = accumulate({total, rate, Rational(1)}, 1);
  push(report, "repaid after one more year (gur₇)", "10",
       sex(convert({repayment.exact_total, std::nullopt}, "gur₇", system)));
  return report;
}

// YBC 4669 rev. 11: the silver principal that 20% yearly interest turns
// into 1 after three years: (1 + 0;12)^3 x = 1.
ScenarioReport scenario_ybc4669() {
  ScenarioReport report;
  report.name = "ybc4669";
  report.title = "(1 + 0;12)^3 x = 1, silver principal";

  Rational rate = literal_value(parse_sex("0;12"));
  push(report, "rate per year", "1/5", rate.to_fraction_string());

  Rational principal = solve_principal(Rational(1), rate, 3);
  push(report, "principal (exact)", "125/216", principal.to_fraction_string());
  push(report, "principal (sexagesimal)", "0;34,43,20", sex(principal));
  push(report, "check (1 + 0;12)^3 x", "1",
       (pow_int(Rational(1) + rate, 3) * principal).to_fraction_string());
  return report;
}

// VAT 8528 no. 1: 2^(x/5) = 1,4, i.e. five-yearly doubling, solved at a
// stroke with the base-2 exponent table's line "1,4 corresponds to 6".
ScenarioReport scenario_vat8528() {
  ScenarioReport report;
  report.name = "vat8528";
  report.title = "2^(x/5) = 1,4, five-year compounding";

  Rational k = literal_value(parse_sex("1,4"));
  push(report, "growth multiple 1,4", "64", k.to_fraction_string());

  LogTable table = LogTable::binary_default();
  push(report, "table exponent for 1,4", "6", std::to_string(table.lookup(k.num())));

  DurationSolution duration = solve_duration_table(k, 2, Rational(5), table);
  push(report, "duration (years)", "30", duration.years.to_fraction_string());
  return report;
}

// AO 6770 no. 2: (1 + 0;12)^x = 2, bracketed between years 3 and 4 and
// interpolated as months deducted from the fourth year.
ScenarioReport scenario_ao6770() {
  ScenarioReport report;
  report.name = "ao6770";
  report.title = "(1 + 0;12)^x = 2, linear interpolation";

  Rational rate = literal_value(parse_sex("0;12"));
  DurationSolution interpolated = solve_duration_interpolated(Rational(2), rate);
  std::string bracket = "(" + std::to_string(interpolated.bracket->first) + ", " +
                        std::to_string(interpolated.bracket->second) + ")";
  push(report, "bracketing years", "(3, 4)", bracket);
  push(report, "months deducted", "2;33,20", sex(*interpolated.months_deducted));
  push(report, "years (interpolated)", "3;47,13,20", sex(interpolated.years));
  push(report, "years (interpolated, exact)", "409/108",
       interpolated.years.to_fraction_string());

  DurationSolution modern = solve_duration_modern(Rational(2), rate, 2);
  push(report, "years (modern, 2 places)", "3;48,6", sex(modern.years));
  return report;
}

} // namespace

ScenarioReport run_scenario(std::string_view name) {
  if (name == "enmetena") return scenario_enmetena();
  if (name == "ybc4669") return scenario_ybc4669();
  if (name == "vat8528") return scenario_vat8528();
  if (name == "ao6770") return scenario_ao6770();
  throw DomainError("unknown scenario '" + std::string(name) +
                    "' (expected enmetena, ybc4669, vat8528 or ao6770)");
}

} // namespace sexag
