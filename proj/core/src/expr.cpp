#include "sexag/expr.hpp"

#include <string>

#include "sexag/sexagesimal.hpp"

namespace sexag {

namespace {

// Recursive descent over:
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | power
//   power   := primary ('^' exponent)*        left-associative
//   exponent:= '-' exponent | primary
//   primary := '(' expr ')' | literal
// Literals are maximal runs of digits, ',' and ';' handed to parse_sex.
class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Rational parse() {
    Rational value = parse_expr();
    skip_spaces();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected trailing input at \"" +
                       std::string(text_.substr(pos_)) + "\"");
    }
    return value;
  }

private:
  void skip_spaces() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n')) {
      ++pos_;
    }
  }

  bool eat(char c) {
    skip_spaces();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_spaces();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Rational parse_expr() {
    Rational value = parse_term();
    while (true) {
      if (eat('+')) {
        value += parse_term();
      } else if (eat('-')) {
        value -= parse_term();
      } else {
        return value;
      }
    }
  }

  Rational parse_term() {
    Rational value = parse_factor();
    while (true) {
      if (eat('*')) {
        value *= parse_factor();
      } else if (eat('/')) {
        value /= parse_factor();
      } else {
        return value;
      }
    }
  }

  Rational parse_factor() {
    if (eat('-')) {
      return -parse_factor();
    }
    return parse_power();
  }

  Rational parse_power() {
    Rational value = parse_primary();
    while (eat('^')) {
      Rational exponent = parse_exponent();
      if (!exponent.is_integer()) {
        throw DomainError("exponent " + exponent.to_fraction_string() +
                          " is not an integer");
      }
      if (exponent.num() > 1'000'000 || exponent.num() < -1'000'000) {
        throw DomainError("exponent magnitude exceeds 1000000");
      }
      value = pow_int(value, exponent.num().convert_to<long long>());
    }
    return value;
  }

  Rational parse_exponent() {
    if (eat('-')) {
      return -parse_exponent();
    }
    return parse_primary();
  }

  Rational parse_primary() {
    skip_spaces();
    if (eat('(')) {
      Rational value = parse_expr();
      if (!eat(')')) {
        throw ParseError("expected ')'");
      }
      return value;
    }
    char c = peek();
    if (c >= '0' && c <= '9') {
      size_t start = pos_;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if ((d >= '0' && d <= '9') || d == ',' || d == ';') {
          ++pos_;
        } else {
          break;
        }
      }
      return literal_value(parse_sex(text_.substr(start, pos_ - start)));
    }
    if (c == '\0') {
      throw ParseError("unexpected end of expression");
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

} // namespace

Rational eval_expression(std::string_view text) {
  return Parser(text).parse();
}

} // namespace sexag
