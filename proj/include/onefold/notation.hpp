#pragma once

#include <string>
#include <string_view>

#include "onefold/formula.hpp"

namespace onefold {

// Postfix (Reverse Polish) rendering over the alphabet "1+*^", no separators.
// Left operand first; for ^ that is base then exponent.
std::string to_postfix(const Formula& f);

// Inverse of to_postfix. Whitespace between tokens is ignored. Throws
// FormulaError with code UnknownToken, StackUnderflow, TrailingOperands,
// OneAsOperand or EmptyInput; the first problem scanning left to right wins.
Formula from_postfix(std::string_view text);

// Fully parenthesized infix, except that a bare leaf operand prints as 1:
// "1+(1+1)", "(1+1)*(1+1)".
std::string to_infix(const Formula& f);

// Parses the output format of to_infix. Redundant parentheses such as "(1)"
// are accepted; an unparenthesized chain like "1+1+1" is rejected with
// AmbiguousInfix since there is no precedence. Other malformed input raises
// InfixSyntax; a bare 1 under * or ^ raises OneAsOperand.
Formula parse_infix(std::string_view text);

}  // namespace onefold
