#include "sexag/metrology.hpp"

#include <cctype>
#include <utility>

namespace sexag {

namespace {

// Decodes one UTF-8 codepoint starting at i, advancing i. Malformed
// bytes pass through one at a time.
char32_t next_codepoint(std::string_view s, size_t& i) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  int len = 1;
  char32_t cp = c;
  if ((c & 0x80U) == 0x00U) {
    len = 1;
  } else if ((c & 0xE0U) == 0xC0U) {
    len = 2;
    cp = c & 0x1FU;
  } else if ((c & 0xF0U) == 0xE0U) {
    len = 3;
    cp = c & 0x0FU;
  } else if ((c & 0xF8U) == 0xF0U) {
    len = 4;
    cp = c & 0x07U;
  } else {
    ++i;
    return c;
  }
  if (i + len > s.size()) {
    ++i;
    return c;
  }
  for (int k = 1; k < len; ++k) {
    unsigned char cont = static_cast<unsigned char>(s[i + k]);
    if ((cont & 0xC0U) != 0x80U) {
      ++i;
      return c;
    }
    cp = (cp << 6) | (cont & 0x3FU);
  }
  i += len;
  return cp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

} // namespace

std::string normalize_name(std::string_view name) {
  std::string out;
  out.reserve(name.size());
  size_t i = 0;
  while (i < name.size()) {
    char32_t cp = next_codepoint(name, i);
    switch (cp) {
    case U'à': case U'á': case U'â': case U'ā':
      out += 'a';
      break;
    case U'è': case U'é': case U'ê': case U'ē':
      out += 'e';
      break;
    case U'ì': case U'í': case U'î': case U'ī':
      out += 'i';
      break;
    case U'ù': case U'ú': case U'û': case U'ū':
      out += 'u';
      break;
    case U'š': case U'Š':
      out += 's';
      break;
    case U'ĝ': case U'ğ':
      out += 'g';
      break;
    case U'\'': case U'’': case U'ʼ': // apostrophes dropped
      break;
    default:
      if (cp >= U'₀' && cp <= U'₉') { // subscript digits
        out += static_cast<char>('0' + (cp - U'₀'));
      } else if (cp < 0x80) {
        out += static_cast<char>(std::tolower(static_cast<int>(cp)));
      } else {
        append_utf8(out, cp);
      }
      break;
    }
  }
  return out;
}

UnitSystem UnitSystem::builtin() {
  UnitSystem system;
  system.define_unit({"sìla", Rational(1)});
  system.define_unit({"bán", Rational(10)});
  system.define_unit({"PI", Rational(60)});
  system.define_unit({"gur", Rational(300)});
  system.define_unit({"gur₇", Rational(1152000)});
  system.define_numeral({"šár", BigInt(3600)});
  system.define_numeral({"šar'u", BigInt(36000)});
  system.define_numeral({"šár-gal", BigInt(216000)});
  system.define_numeral({"šar'u-gal", BigInt(2160000)});
  return system;
}

void UnitSystem::define_unit(Unit unit) {
  if (unit.sila_equivalent <= Rational(0)) {
    throw DomainError("unit " + unit.name + ": sila_equivalent must be positive");
  }
  std::string key = normalize_name(unit.name);
  if (key.empty()) {
    throw DomainError("unit name must not be empty");
  }
  auto it = unit_index_.find(key);
  if (it != unit_index_.end()) {
    if (key == "sila") {
      // Restating sìla = 1 is a no-op, so table files round-trip; any
      // other value is a redefinition of the base unit.
      if (unit.sila_equivalent != units_[it->second].sila_equivalent) {
        throw DomainError("the base unit sìla cannot be redefined");
      }
      return;
    }
    units_[it->second] = std::move(unit);
    return;
  }
  unit_index_.emplace(std::move(key), units_.size());
  units_.push_back(std::move(unit));
}

void UnitSystem::define_numeral(NumeralSymbol numeral) {
  if (numeral.value <= 0) {
    throw DomainError("numeral " + numeral.name + ": value must be positive");
  }
  std::string key = normalize_name(numeral.name);
  if (key.empty()) {
    throw DomainError("numeral name must not be empty");
  }
  auto it = numeral_index_.find(key);
  if (it != numeral_index_.end()) {
    numerals_[it->second] = std::move(numeral);
    return;
  }
  numeral_index_.emplace(std::move(key), numerals_.size());
  numerals_.push_back(std::move(numeral));
}

const Unit* UnitSystem::find_unit(std::string_view name) const {
  auto it = unit_index_.find(normalize_name(name));
  return it == unit_index_.end() ? nullptr : &units_[it->second];
}

const NumeralSymbol* UnitSystem::find_numeral(std::string_view name) const {
  auto it = numeral_index_.find(normalize_name(name));
  return it == numeral_index_.end() ? nullptr : &numerals_[it->second];
}

const Unit& UnitSystem::unit(std::string_view name) const {
  const Unit* u = find_unit(name);
  if (u == nullptr) {
    throw DomainError("unknown unit '" + std::string(name) + "'");
  }
  return *u;
}

namespace {

bool is_all_digits(std::string_view s) {
  if (s.empty()) {
    return false;
  }
  for (char c : s) {
    if (c < '0' || c > '9') {
      return false;
    }
  }
  return true;
}

BigInt parse_count(std::string_view text) {
  if (!is_all_digits(text) || text.size() > 18) {
    throw ParseError("malformed count \"" + std::string(text) + "\"");
  }
  BigInt count{std::string(text)};
  if (count <= 0) {
    throw ParseError("malformed count \"" + std::string(text) +
                     "\" (counts are positive)");
  }
  return count;
}

// Commodity words carry no numeric content and are skipped.
bool is_commodity(std::string_view normalized) { return normalized == "se"; }

} // namespace

Quantity parse_quantity(std::string_view text, const UnitSystem& system) {
  Quantity quantity{Rational(0), std::nullopt};

  auto apply = [&](const BigInt& count, std::string_view name) {
    if (const NumeralSymbol* numeral = system.find_numeral(name)) {
      quantity.sila_magnitude += Rational(count * numeral->value);
      return;
    }
    if (const Unit* unit = system.find_unit(name)) {
      quantity.sila_magnitude += Rational(count) * unit->sila_equivalent;
      quantity.display_unit = unit->name;
      return;
    }
    throw ParseError("unknown symbol '" + std::string(name) + "'");
  };

  std::optional<BigInt> pending_count;
  bool any_token = false;

  size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) {
      ++pos;
    }
    if (pos >= text.size()) {
      break;
    }
    size_t end = pos;
    while (end < text.size() && text[end] != ' ' && text[end] != '\t') {
      ++end;
    }
    std::string_view token = text.substr(pos, end - pos);
    pos = end;
    any_token = true;

    size_t open = token.find('(');
    if (open != std::string_view::npos) {
      if (token.back() != ')' || open + 2 > token.size() - 1) {
        throw ParseError("malformed term \"" + std::string(token) + "\"");
      }
      std::string_view name = token.substr(open + 1, token.size() - open - 2);
      if (name.find('(') != std::string_view::npos) {
        throw ParseError("malformed term \"" + std::string(token) + "\"");
      }
      BigInt count;
      if (open == 0) {
        if (!pending_count) {
          throw ParseError("symbol (" + std::string(name) +
                           ") without a preceding count");
        }
        count = *pending_count;
        pending_count.reset();
      } else {
        if (pending_count) {
          throw ParseError("dangling count before \"" + std::string(token) + "\"");
        }
        count = parse_count(token.substr(0, open));
      }
      apply(count, name);
      continue;
    }

    if (is_all_digits(token)) {
      if (pending_count) {
        throw ParseError("two counts in a row at \"" + std::string(token) + "\"");
      }
      pending_count = parse_count(token);
      continue;
    }

    // A bare word: the symbol of a pending count, or a trailing display
    // hint / commodity word.
    if (pending_count) {
      apply(*pending_count, token);
      pending_count.reset();
      continue;
    }
    std::string normalized = normalize_name(token);
    if (is_commodity(normalized)) {
      continue;
    }
    if (const Unit* unit = system.find_unit(token)) {
      quantity.display_unit = unit->name;
      continue;
    }
    if (system.find_numeral(token) != nullptr) {
      throw ParseError("numeral '" + std::string(token) + "' requires a count");
    }
    throw ParseError("unknown symbol '" + std::string(token) + "'");
  }

  if (pending_count) {
    throw ParseError("dangling count at end of quantity");
  }
  if (!any_token) {
    throw ParseError("empty quantity");
  }
  return quantity;
}

Rational convert(const Quantity& q, std::string_view target,
                 const UnitSystem& system) {
  return q.sila_magnitude / system.unit(target).sila_equivalent;
}

Rational rate_from_quantities(const Quantity& interest, const Quantity& principal) {
  if (principal.sila_magnitude.is_zero()) {
    throw DivisionByZeroError("zero principal");
  }
  return interest.sila_magnitude / principal.sila_magnitude;
}

namespace {

BigInt parse_integer(std::string_view text, size_t line_no) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && digits.front() == '-') {
    negative = true;
    digits.remove_prefix(1);
  }
  if (!is_all_digits(digits)) {
    throw ParseError("line " + std::to_string(line_no) + ": bad integer \"" +
                     std::string(text) + "\"");
  }
  BigInt value{std::string(digits)};
  return negative ? BigInt(-value) : value;
}

Rational parse_value(std::string_view text, size_t line_no) {
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_integer(text, line_no));
  }
  BigInt num = parse_integer(text.substr(0, slash), line_no);
  BigInt den = parse_integer(text.substr(slash + 1), line_no);
  if (den == 0) {
    throw ParseError("line " + std::to_string(line_no) + ": zero denominator");
  }
  return Rational(std::move(num), std::move(den));
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
      ++pos;
    }
    size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') {
      ++end;
    }
    if (end > pos) {
      fields.push_back(line.substr(pos, end - pos));
    }
    pos = end;
  }
  return fields;
}

} // namespace

UnitSystem load_unit_table(std::string_view document) {
  UnitSystem system = UnitSystem::builtin();

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
    std::vector<std::string_view> fields = split_fields(line);
    if (fields.empty()) {
      continue;
    }

    if (fields[0] == "unit") {
      if (fields.size() != 3) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected \"unit <name> <sila_equivalent>\"");
      }
      try {
        system.define_unit({std::string(fields[1]), parse_value(fields[2], line_no)});
      } catch (const DomainError& e) {
        throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
      }
    } else if (fields[0] == "numeral") {
      if (fields.size() != 3) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected \"numeral <name> <integer>\"");
      }
      try {
        system.define_numeral({std::string(fields[1]), parse_integer(fields[2], line_no)});
      } catch (const DomainError& e) {
        throw DomainError("line " + std::to_string(line_no) + ": " + e.what());
      }
    } else if (fields[0] == "logentry") {
      // Consumed by load_log_tables; one document may describe both.
      if (fields.size() != 4) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected \"logentry <base> <argument> <exponent>\"");
      }
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown directive \"" +
                       std::string(fields[0]) + "\"");
    }
  }

  // gal means "big": wherever both X and X-gal exist, X-gal = 60 X.
  for (const NumeralSymbol& numeral : system.numerals()) {
    std::string key = normalize_name(numeral.name);
    if (key.size() > 4 && key.ends_with("-gal")) {
      const NumeralSymbol* base = system.find_numeral(key.substr(0, key.size() - 4));
      if (base != nullptr && numeral.value != base->value * 60) {
        throw DomainError("numeral " + numeral.name + " = " + numeral.value.str() +
                          " breaks the gal law (60 * " + base->name + " = " +
                          BigInt(base->value * 60).str() + ")");
      }
    }
  }
  return system;
}

} // namespace sexag
