#pragma once

#include <cstddef>
#include <memory>
#include <optional>

#include "onefold/bignat.hpp"
#include "onefold/op_set.hpp"

namespace onefold {

// A fan-in-2 expression tree whose leaves are all the literal 1.
//
// Formulas are immutable and share subtrees, so copies are cheap and safe to
// read from several threads. Construction enforces the convention that the
// bare leaf 1 is never an operand of * or ^ (otherwise even 1 would have
// infinitely many representations).
class Formula {
 public:
  // The leaf 1.
  Formula() = default;

  static Formula one() { return Formula(); }
  // Throws FormulaError(OneAsOperand) when op is Mul or Pow and either
  // operand is the bare leaf.
  static Formula make(OpKind op, Formula left, Formula right);
  static Formula add(Formula left, Formula right) {
    return make(OpKind::Add, std::move(left), std::move(right));
  }
  static Formula mul(Formula left, Formula right) {
    return make(OpKind::Mul, std::move(left), std::move(right));
  }
  static Formula pow(Formula base, Formula exponent) {
    return make(OpKind::Pow, std::move(base), std::move(exponent));
  }

  bool is_leaf() const noexcept { return node_ == nullptr; }

  // The accessors below require !is_leaf().
  OpKind op() const noexcept;
  const Formula& left() const noexcept;
  const Formula& right() const noexcept;

  std::size_t leaf_count() const noexcept;
  std::size_t token_length() const noexcept { return 2 * leaf_count() - 1; }

  // True when every internal node uses an operation in ops.
  bool uses_only(OpSet ops) const;
  bool contains(OpKind op) const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  OpKind op;
  Formula left;
  Formula right;
  std::size_t leaves;
};

inline OpKind Formula::op() const noexcept { return node_->op; }
inline const Formula& Formula::left() const noexcept { return node_->left; }
inline const Formula& Formula::right() const noexcept { return node_->right; }
inline std::size_t Formula::leaf_count() const noexcept {
  return node_ ? node_->leaves : 1;
}

// Largest value evaluate() will materialize without a cap, in bits.
inline constexpr std::size_t kMaxValueBits = std::size_t{1} << 26;

// Exact value of f. Throws FormulaError(ValueTooLarge) past kMaxValueBits.
BigNat evaluate(const Formula& f);

// Exact value of f, or nullopt as soon as any intermediate or final value
// exceeds cap.
std::optional<BigNat> evaluate(const Formula& f, const BigNat& cap);

// a op b for operands >= 1. Throws FormulaError(ValueTooLarge) past
// kMaxValueBits.
BigNat apply(OpKind op, const BigNat& a, const BigNat& b);

// a op b, or nullopt if the result would exceed cap. Operands must be >= 1.
std::optional<BigNat> apply_capped(OpKind op, const BigNat& a, const BigNat& b,
                                   const BigNat& cap);

}  // namespace onefold
