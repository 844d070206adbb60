#include "onefold/formula.hpp"

#include "onefold/error.hpp"

namespace onefold {

Formula Formula::make(OpKind op, Formula left, Formula right) {
  if (op != OpKind::Add && (left.is_leaf() || right.is_leaf())) {
    throw FormulaError(FormulaErrc::OneAsOperand, 0,
                       std::string("1 cannot be an operand of '") + op_token(op) + "'");
  }
  const std::size_t leaves = left.leaf_count() + right.leaf_count();
  return Formula(std::make_shared<const Node>(Node{op, std::move(left), std::move(right), leaves}));
}

bool Formula::uses_only(OpSet ops) const {
  if (is_leaf()) return true;
  return ops.contains(op()) && left().uses_only(ops) && right().uses_only(ops);
}

bool Formula::contains(OpKind kind) const {
  if (is_leaf()) return false;
  return op() == kind || left().contains(kind) || right().contains(kind);
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() || b.is_leaf()) return false;
  return a.op() == b.op() && a.leaf_count() == b.leaf_count() && a.left() == b.left() &&
         a.right() == b.right();
}

std::optional<BigNat> apply_capped(OpKind op, const BigNat& a, const BigNat& b,
                                   const BigNat& cap) {
  BigNat out;
  switch (op) {
    case OpKind::Add:
      out = a + b;
      break;
    case OpKind::Mul:
      out = a * b;
      break;
    case OpKind::Pow: {
      if (a == 1) return BigNat(1);
      // With a >= 2, a^b >= 2^b, and 2^bit_length(cap) > cap.
      const std::size_t cap_bits = bit_length(cap);
      if (b > big(cap_bits)) return std::nullopt;
      const std::uint64_t e = to_u64(b);
      if ((bit_length(a) - 1) * e >= cap_bits) return std::nullopt;
      mpz_pow_ui(out.get_mpz_t(), a.get_mpz_t(), e);
      break;
    }
  }
  if (out > cap) return std::nullopt;
  return out;
}

BigNat apply(OpKind op, const BigNat& a, const BigNat& b) {
  switch (op) {
    case OpKind::Add:
      return a + b;
    case OpKind::Mul:
      if (bit_length(a) + bit_length(b) > kMaxValueBits + 1) break;
      return a * b;
    case OpKind::Pow: {
      if (a == 1) return BigNat(1);
      if (!fits_u64(b)) break;
      const std::uint64_t e = to_u64(b);
      if (e > kMaxValueBits || (bit_length(a) - 1) * e > kMaxValueBits) break;
      BigNat out;
      mpz_pow_ui(out.get_mpz_t(), a.get_mpz_t(), e);
      return out;
    }
  }
  throw FormulaError(FormulaErrc::ValueTooLarge, 0,
                     "value exceeds " + std::to_string(kMaxValueBits) + " bits");
}

BigNat evaluate(const Formula& f) {
  if (f.is_leaf()) return 1;
  return apply(f.op(), evaluate(f.left()), evaluate(f.right()));
}

std::optional<BigNat> evaluate(const Formula& f, const BigNat& cap) {
  if (f.is_leaf()) {
    if (cap < 1) return std::nullopt;
    return BigNat(1);
  }
  auto a = evaluate(f.left(), cap);
  if (!a) return std::nullopt;
  auto b = evaluate(f.right(), cap);
  if (!b) return std::nullopt;
  return apply_capped(f.op(), *a, *b, cap);
}

}  // namespace onefold
