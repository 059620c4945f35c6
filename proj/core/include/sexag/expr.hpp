#pragma once

#include <string_view>

#include "sexag/rational.hpp"

namespace sexag {

/// Evaluates an arithmetic expression over sexagesimal literals with
/// + - * / ^ and parentheses, exactly. ^ binds tightest, then * and /,
/// then + and -, each tier left-associative. Exponents must evaluate to
/// integers. Point-less literals read as integers ("5,20,0,0" is
/// 1152000, not 5;20,0,0).
///
///   eval_expression("(1;20)^7")        -> 16384/2187
///   eval_expression("7;30 * 5,20,0,0") -> 8640000
///
/// Throws ParseError on syntax and DomainError on zero division or
/// non-integer exponents.
Rational eval_expression(std::string_view text);

} // namespace sexag
