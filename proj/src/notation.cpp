#include "onefold/notation.hpp"

#include <cctype>
#include <vector>

#include "onefold/error.hpp"

namespace onefold {

namespace {

void append_postfix(const Formula& f, std::string& out) {
  if (f.is_leaf()) {
    out += '1';
    return;
  }
  append_postfix(f.left(), out);
  append_postfix(f.right(), out);
  out += op_token(f.op());
}

void append_infix_operand(const Formula& f, std::string& out);

void append_infix(const Formula& f, std::string& out) {
  if (f.is_leaf()) {
    out += '1';
    return;
  }
  append_infix_operand(f.left(), out);
  out += op_token(f.op());
  append_infix_operand(f.right(), out);
}

void append_infix_operand(const Formula& f, std::string& out) {
  if (f.is_leaf()) {
    out += '1';
    return;
  }
  out += '(';
  append_infix(f, out);
  out += ')';
}

std::optional<OpKind> op_from_token(char c) {
  switch (c) {
    case '+': return OpKind::Add;
    case '*': return OpKind::Mul;
    case '^': return OpKind::Pow;
    default: return std::nullopt;
  }
}

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class InfixParser {
 public:
  explicit InfixParser(std::string_view text) : text_(text) {}

  Formula parse() {
    skip_space();
    if (pos_ == text_.size()) {
      throw FormulaError(FormulaErrc::EmptyInput, 0, "no tokens");
    }
    Formula f = expression();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') fail(FormulaErrc::InfixSyntax, "unbalanced ')'");
      fail(FormulaErrc::InfixSyntax, std::string("unexpected '") + text_[pos_] + "'");
    }
    return f;
  }

 private:
  // expression := operand [op operand]
  Formula expression() {
    Formula lhs = operand();
    skip_space();
    if (pos_ == text_.size()) return lhs;
    const auto op = op_from_token(text_[pos_]);
    if (!op) return lhs;
    const std::size_t op_pos = pos_++;
    Formula rhs = operand();
    skip_space();
    if (pos_ < text_.size() && op_from_token(text_[pos_])) {
      fail(FormulaErrc::AmbiguousInfix, "chained operators need parentheses");
    }
    if (*op != OpKind::Add && (lhs.is_leaf() || rhs.is_leaf())) {
      throw FormulaError(FormulaErrc::OneAsOperand, op_pos,
                         std::string("1 cannot be an operand of '") + op_token(*op) + "'");
    }
    return Formula::make(*op, std::move(lhs), std::move(rhs));
  }

  // operand := '1' | '(' expression ')'
  Formula operand() {
    skip_space();
    if (pos_ == text_.size()) fail(FormulaErrc::InfixSyntax, "operand expected");
    const char c = text_[pos_];
    if (c == '1') {
      ++pos_;
      return Formula::one();
    }
    if (c == '(') {
      ++pos_;
      Formula inner = expression();
      skip_space();
      if (pos_ == text_.size() || text_[pos_] != ')') fail(FormulaErrc::InfixSyntax, "')' expected");
      ++pos_;
      return inner;
    }
    fail(FormulaErrc::InfixSyntax, std::string("unexpected '") + c + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  [[noreturn]] void fail(FormulaErrc code, const std::string& detail) const {
    throw FormulaError(code, pos_, detail);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_postfix(const Formula& f) {
  std::string out;
  out.reserve(f.token_length());
  append_postfix(f, out);
  return out;
}

Formula from_postfix(std::string_view text) {
  std::vector<Formula> stack;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (is_space(c)) continue;
    if (c == '1') {
      stack.emplace_back();
      continue;
    }
    const auto op = op_from_token(c);
    if (!op) {
      throw FormulaError(FormulaErrc::UnknownToken, i, std::string("unexpected '") + c + "'");
    }
    if (stack.size() < 2) {
      throw FormulaError(FormulaErrc::StackUnderflow, i,
                         std::string("'") + c + "' needs two operands");
    }
    Formula rhs = std::move(stack.back());
    stack.pop_back();
    Formula lhs = std::move(stack.back());
    stack.pop_back();
    if (*op != OpKind::Add && (lhs.is_leaf() || rhs.is_leaf())) {
      throw FormulaError(FormulaErrc::OneAsOperand, i,
                         std::string("1 cannot be an operand of '") + c + "'");
    }
    stack.push_back(Formula::make(*op, std::move(lhs), std::move(rhs)));
  }
  if (stack.empty()) throw FormulaError(FormulaErrc::EmptyInput, text.size(), "no tokens");
  if (stack.size() > 1) {
    throw FormulaError(FormulaErrc::TrailingOperands, text.size(),
                       std::to_string(stack.size()) + " items left on the stack");
  }
  return std::move(stack.back());
}

std::string to_infix(const Formula& f) {
  std::string out;
  append_infix(f, out);
  return out;
}

Formula parse_infix(std::string_view text) { return InfixParser(text).parse(); }

}  // namespace onefold
