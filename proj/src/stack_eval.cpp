#include "onefold/stack_eval.hpp"

#include <algorithm>
#include <cctype>
#include <utility>
#include <vector>

#include "onefold/error.hpp"
#include "onefold/notation.hpp"

namespace onefold {

std::size_t strahler(const Formula& f) {
  if (f.is_leaf()) return 1;
  const std::size_t l = strahler(f.left());
  const std::size_t r = strahler(f.right());
  return l == r ? l + 1 : std::max(l, r);
}

namespace {

// Evaluating `first` then `second` holds first's result while second runs.
std::size_t sequenced_cost(std::size_t first, std::size_t second) {
  return std::max(first, second + 1);
}

std::pair<Formula, std::size_t> reorder(const Formula& f) {
  if (f.is_leaf()) return {f, 1};
  auto [left, left_cost] = reorder(f.left());
  auto [right, right_cost] = reorder(f.right());
  const std::size_t as_written = sequenced_cost(left_cost, right_cost);
  if (is_commutative(f.op())) {
    const std::size_t swapped = sequenced_cost(right_cost, left_cost);
    if (swapped < as_written) {
      return {Formula::make(f.op(), std::move(right), std::move(left)), swapped};
    }
  }
  return {Formula::make(f.op(), std::move(left), std::move(right)), as_written};
}

}  // namespace

MinMemoryEmission min_memory_postfix(const Formula& f) {
  auto [reordered, depth] = reorder(f);
  std::string postfix = to_postfix(reordered);
  return {std::move(reordered), std::move(postfix), depth};
}

std::size_t natural_stack_depth(const Formula& f) {
  if (f.is_leaf()) return 1;
  return sequenced_cost(natural_stack_depth(f.left()), natural_stack_depth(f.right()));
}

StackEvaluation eval_postfix_with_depth(std::string_view text, const std::optional<BigNat>& cap) {
  struct Slot {
    BigNat value;
    bool bare_one;
  };
  std::vector<Slot> stack;
  std::size_t max_depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '1') {
      if (cap && *cap < 1) throw FormulaError(FormulaErrc::CapExceeded, i, "1 exceeds the cap");
      stack.push_back({BigNat(1), true});
      max_depth = std::max(max_depth, stack.size());
      continue;
    }
    OpKind op;
    if (c == '+') {
      op = OpKind::Add;
    } else if (c == '*') {
      op = OpKind::Mul;
    } else if (c == '^') {
      op = OpKind::Pow;
    } else {
      throw FormulaError(FormulaErrc::UnknownToken, i, std::string("unexpected '") + c + "'");
    }
    if (stack.size() < 2) {
      throw FormulaError(FormulaErrc::StackUnderflow, i,
                         std::string("'") + c + "' needs two operands");
    }
    Slot rhs = std::move(stack.back());
    stack.pop_back();
    Slot& lhs = stack.back();
    if (op != OpKind::Add && (lhs.bare_one || rhs.bare_one)) {
      throw FormulaError(FormulaErrc::OneAsOperand, i,
                         std::string("1 cannot be an operand of '") + c + "'");
    }
    if (cap) {
      auto v = apply_capped(op, lhs.value, rhs.value, *cap);
      if (!v) throw FormulaError(FormulaErrc::CapExceeded, i, "intermediate value exceeds the cap");
      lhs.value = std::move(*v);
    } else {
      try {
        lhs.value = apply(op, lhs.value, rhs.value);
      } catch (const FormulaError& e) {
        throw FormulaError(e.code(), i, "value too large to materialize");
      }
    }
    lhs.bare_one = false;
  }
  if (stack.empty()) throw FormulaError(FormulaErrc::EmptyInput, text.size(), "no tokens");
  if (stack.size() > 1) {
    throw FormulaError(FormulaErrc::TrailingOperands, text.size(),
                       std::to_string(stack.size()) + " items left on the stack");
  }
  return {std::move(stack.back().value), max_depth};
}

}  // namespace onefold
