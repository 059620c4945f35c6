// Command-line surface: exact sexagesimal evaluation, capacity-unit
// conversion, compound-interest solvers, and self-verifying replays of
// the four attested case studies.
//
// Exit codes: 0 success/match, 1 usage, 2 parse error, 3 domain error,
// 4 scenario mismatch.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sexag/expr.hpp"
#include "sexag/interest.hpp"
#include "sexag/metrology.hpp"
#include "sexag/scenarios.hpp"
#include "sexag/sexagesimal.hpp"

namespace {

using nlohmann::json;
using namespace sexag;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OutputRecord {
  std::string sex;
  std::string decimal;
  std::string rational;
  bool exact = false;
  std::optional<std::string> method;
  std::optional<std::pair<long, long>> bracket;
  std::optional<std::string> months;
};

struct Options {
  bool json = false;
  unsigned places = 20;
  RoundingMode mode = RoundingMode::floor;
  std::string units_file;
};

RoundingMode parse_mode(const std::string& name) {
  if (name == "floor") return RoundingMode::floor;
  if (name == "ceiling") return RoundingMode::ceiling;
  if (name == "nearest") return RoundingMode::nearest_half_up;
  throw UsageError("unknown rounding mode '" + name + "'");
}

OutputRecord make_record(const Rational& value, const Options& opt) {
  OutputRecord record;
  FormattedSex s = format_sex(value, opt.places, opt.mode);
  FormattedDecimal d = format_decimal(value, opt.places, opt.mode);
  record.sex = s.text;
  record.decimal = d.text;
  record.rational = value.to_fraction_string();
  record.exact = s.exact;
  return record;
}

void print_record(const OutputRecord& record, const Options& opt) {
  if (opt.json) {
    json j;
    j["sex"] = record.sex;
    j["decimal"] = record.decimal;
    j["rational"] = record.rational;
    j["exact"] = record.exact;
    if (record.method) j["method"] = *record.method;
    if (record.bracket) j["bracket"] = {record.bracket->first, record.bracket->second};
    if (record.months) j["months"] = *record.months;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << "sex:      " << record.sex << "\n";
  std::cout << "decimal:  " << record.decimal << "\n";
  std::cout << "rational: " << record.rational << "\n";
  std::cout << "exact:    " << (record.exact ? "true" : "false") << "\n";
  if (record.method) {
    std::cout << "method:   " << *record.method << "\n";
  }
  if (record.bracket) {
    std::cout << "bracket:  (" << record.bracket->first << ", "
              << record.bracket->second << ")\n";
  }
  if (record.months) {
    std::cout << "months:   " << *record.months << "\n";
  }
}

// Numeric flags accept anything the expression evaluator does ("0;12",
// "1/3", "1,4") plus plain decimals ("100", "7.5", "301/1000"), which are
// not valid sexagesimal notation and so never ambiguous.
Rational parse_value_flag(const std::string& text, const std::string& flag) {
  try {
    return eval_expression(text);
  } catch (const ParseError& primary) {
    try {
      size_t slash = text.find('/');
      if (slash == std::string::npos) {
        return from_decimal_string(text);
      }
      return from_decimal_string(text.substr(0, slash)) /
             from_decimal_string(text.substr(slash + 1));
    } catch (const ParseError&) {
      throw ParseError(flag + ": " + primary.what());
    }
  }
}

struct Session {
  Options opt;
  UnitSystem system = UnitSystem::builtin();
  std::vector<LogTable> extra_tables;

  void load_units() {
    if (opt.units_file.empty()) {
      return;
    }
    std::ifstream in(opt.units_file, std::ios::binary);
    if (!in) {
      throw UsageError("cannot read units file '" + opt.units_file + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string document = buffer.str();
    system = load_unit_table(document);
    extra_tables = load_log_tables(document);
  }

  const LogTable* find_table(int base) const {
    for (const LogTable& table : extra_tables) {
      if (table.base() == base) {
        return &table;
      }
    }
    return nullptr;
  }
};

int cmd_eval(Session& session, const std::string& expr) {
  print_record(make_record(eval_expression(expr), session.opt), session.opt);
  return 0;
}

int cmd_convert(Session& session, const std::string& text, const std::string& target) {
  Quantity quantity = parse_quantity(text, session.system);
  Rational value = convert(quantity, target, session.system);
  print_record(make_record(value, session.opt), session.opt);
  return 0;
}

int cmd_solve_principal(Session& session, const std::string& total_text,
                        const std::string& rate_text, long long n) {
  if (n < 1) {
    throw UsageError("--n must be a positive integer");
  }
  Rational total = parse_value_flag(total_text, "--total");
  Rational rate = parse_value_flag(rate_text, "--rate");
  Rational principal = solve_principal(total, rate, static_cast<unsigned>(n));
  print_record(make_record(principal, session.opt), session.opt);
  return 0;
}

int cmd_solve_duration(Session& session, const std::string& method,
                       const std::string& k_text, const std::string& rate_text,
                       int base, const std::string& period_text,
                       int months_per_year, long max_n,
                       const std::string& log2_text, const std::string& log3_text) {
  Rational k = parse_value_flag(k_text, "--k");

  DurationSolution solution;
  if (method == "log-approx") {
    if (rate_text.empty()) {
      throw UsageError("--rate is required for --method log-approx");
    }
    DecimalLogTable table(parse_value_flag(log2_text, "--log2"),
                          parse_value_flag(log3_text, "--log3"));
    solution = solve_duration_log_approx(k, parse_value_flag(rate_text, "--rate"), table);
  } else if (method == "table") {
    Rational period = parse_value_flag(period_text, "--period");
    if (const LogTable* loaded = session.find_table(base)) {
      solution = solve_duration_table(k, base, period, *loaded);
    } else if (base == 2) {
      solution = solve_duration_table(k, base, period, LogTable::binary_default());
    } else {
      throw UsageError("no log table with base " + std::to_string(base) +
                       "; provide one via --units");
    }
  } else if (method == "interpolate") {
    if (rate_text.empty()) {
      throw UsageError("--rate is required for --method interpolate");
    }
    solution = solve_duration_interpolated(k, parse_value_flag(rate_text, "--rate"),
                                           months_per_year, max_n);
  } else if (method == "modern") {
    if (rate_text.empty()) {
      throw UsageError("--rate is required for --method modern");
    }
    solution = solve_duration_modern(k, parse_value_flag(rate_text, "--rate"),
                                     session.opt.places);
  } else {
    throw UsageError("unknown method '" + method +
                     "' (expected log-approx, table, interpolate or modern)");
  }

  OutputRecord record = make_record(solution.years, session.opt);
  record.method = std::string(to_string(solution.method));
  record.bracket = solution.bracket;
  if (solution.months_deducted) {
    record.months =
        format_sex(*solution.months_deducted, session.opt.places, session.opt.mode).text;
  }
  print_record(record, session.opt);
  return 0;
}

int cmd_paper(Session& session, const std::string& name) {
  ScenarioReport report = run_scenario(name);
  if (session.opt.json) {
    json j;
    j["scenario"] = report.name;
    j["title"] = report.title;
    j["passed"] = report.passed();
    j["lines"] = json::array();
    for (const ReportLine& line : report.lines) {
      j["lines"].push_back({{"label", line.label},
                            {"expected", line.expected},
                            {"actual", line.actual},
                            {"ok", line.ok}});
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "scenario " << report.name << ": " << report.title << "\n";
    for (const ReportLine& line : report.lines) {
      std::cout << "  " << (line.ok ? "ok   " : "FAIL ") << line.label << ": "
                << line.actual;
      if (!line.ok) {
        std::cout << " (expected " << line.expected << ")";
      }
      std::cout << "\n";
    }
    std::cout << "result: " << (report.passed() ? "PASS" : "FAIL") << "\n";
  }
  return report.passed() ? 0 : 4;
}

int cmd_tables(Session& session) {
  const UnitSystem& system = session.system;
  std::vector<LogTable> tables = session.extra_tables;
  if (session.find_table(2) == nullptr) {
    tables.insert(tables.begin(), LogTable::binary_default());
  }

  if (session.opt.json) {
    json j;
    j["units"] = json::array();
    for (const Unit& unit : system.units()) {
      j["units"].push_back(
          {{"name", unit.name}, {"sila", unit.sila_equivalent.to_fraction_string()}});
    }
    j["numerals"] = json::array();
    for (const NumeralSymbol& numeral : system.numerals()) {
      j["numerals"].push_back({{"name", numeral.name}, {"value", numeral.value.str()}});
    }
    j["logtables"] = json::array();
    for (const LogTable& table : tables) {
      json entries = json::array();
      for (const LogTable::Entry& entry : table.entries()) {
        entries.push_back({entry.argument.str(), entry.exponent});
      }
      j["logtables"].push_back({{"base", table.base()}, {"entries", entries}});
    }
    std::cout << j.dump() << "\n";
    return 0;
  }

  // Emitted in the unit-table format, so the output feeds back into --units.
  std::cout << "# capacity units (sìla equivalents)\n";
  for (const Unit& unit : system.units()) {
    std::cout << "unit " << unit.name << " " << unit.sila_equivalent.to_fraction_string()
              << "\n";
  }
  std::cout << "# large numerals\n";
  for (const NumeralSymbol& numeral : system.numerals()) {
    std::cout << "numeral " << numeral.name << " " << numeral.value.str() << "\n";
  }
  for (const LogTable& table : tables) {
    std::cout << "# base-" << table.base() << " exponent table\n";
    for (const LogTable::Entry& entry : table.entries()) {
      std::cout << "logentry " << table.base() << " " << entry.argument.str() << " "
                << entry.exponent << "\n";
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact base-60 arithmetic, Sumerian capacity metrology, and "
               "compound-interest solvers"};
  app.require_subcommand(1);

  Options opt;
  std::string mode_name = "floor";
  app.add_flag("--json", opt.json, "emit one JSON object per result");
  app.add_option("--places", opt.places, "fractional places for rendering")
      ->capture_default_str();
  app.add_option("--mode", mode_name, "rounding mode: floor, ceiling or nearest")
      ->check(CLI::IsMember({"floor", "ceiling", "nearest"}))
      ->capture_default_str();
  app.add_option("--units", opt.units_file, "unit-table file merged over the built-ins");

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a sexagesimal expression");
  std::string expr;
  eval_cmd->add_option("expression", expr, "expression over sexagesimal literals")
      ->required();

  auto* convert_cmd =
      app.add_subcommand("convert", "convert a transliterated quantity");
  std::string quantity_text, target_unit;
  convert_cmd->add_option("quantity", quantity_text, "e.g. \"4(šar'u-gal) gur₇\"")
      ->required();
  convert_cmd->add_option("--to", target_unit, "target unit")->required();

  auto* solve_cmd = app.add_subcommand("solve", "compound-interest solvers");
  std::string kind, total_text, k_text, rate_text, method = "interpolate";
  std::string period_text = "1", log2_text = "301/1000", log3_text = "477/1000";
  long long n_periods = 0;
  int base = 2, months_per_year = 12;
  long max_n = 1000;
  solve_cmd->add_option("kind", kind, "principal or duration")
      ->required()
      ->check(CLI::IsMember({"principal", "duration"}));
  solve_cmd->add_option("--total", total_text, "amount due (principal solve)");
  solve_cmd->add_option("--k", k_text, "growth multiple (duration solve)");
  solve_cmd->add_option("--rate", rate_text, "rate per period, e.g. 0;12 or 1/3");
  solve_cmd->add_option("--n", n_periods, "number of periods (principal solve)");
  solve_cmd->add_option("--method", method,
                        "log-approx, table, interpolate or modern");
  solve_cmd->add_option("--base", base, "log table base (table method)")
      ->capture_default_str();
  solve_cmd->add_option("--period", period_text, "years per compounding period")
      ->capture_default_str();
  solve_cmd->add_option("--months-per-year", months_per_year,
                        "months in a year (interpolate method)")
      ->capture_default_str();
  solve_cmd->add_option("--max-n", max_n, "scan horizon in periods")
      ->capture_default_str();
  solve_cmd->add_option("--log2", log2_text, "decimal log 2 approximation")
      ->capture_default_str();
  solve_cmd->add_option("--log3", log3_text, "decimal log 3 approximation")
      ->capture_default_str();

  auto* paper_cmd =
      app.add_subcommand("paper", "replay an attested case study and verify it");
  std::string scenario;
  paper_cmd->add_option("scenario", scenario, "enmetena, ybc4669, vat8528 or ao6770")
      ->required();

  app.add_subcommand("tables", "print the active units, numerals and log tables");

  // Let the global rendering flags appear after the subcommand as well.
  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e); // --help and friends
    }
    app.exit(e);
    return 1;
  }

  try {
    Session session;
    session.opt = opt;
    session.opt.mode = parse_mode(mode_name);
    session.load_units();

    if (app.got_subcommand(eval_cmd)) {
      return cmd_eval(session, expr);
    }
    if (app.got_subcommand(convert_cmd)) {
      return cmd_convert(session, quantity_text, target_unit);
    }
    if (app.got_subcommand(solve_cmd)) {
      if (kind == "principal") {
        if (total_text.empty() || rate_text.empty() || n_periods == 0) {
          throw UsageError("solve principal needs --total, --rate and --n");
        }
        return cmd_solve_principal(session, total_text, rate_text, n_periods);
      }
      if (k_text.empty()) {
        throw UsageError("solve duration needs --k");
      }
      return cmd_solve_duration(session, method, k_text, rate_text, base,
                                period_text, months_per_year, max_n, log2_text,
                                log3_text);
    }
    if (app.got_subcommand(paper_cmd)) {
      bool known = false;
      for (const std::string& name : scenario_names()) {
        known = known || name == scenario;
      }
      if (!known) {
        throw UsageError("unknown scenario '" + scenario +
                         "' (expected enmetena, ybc4669, vat8528 or ao6770)");
      }
      return cmd_paper(session, scenario);
    }
    return cmd_tables(session);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
