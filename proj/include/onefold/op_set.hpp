#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace onefold {

// Binary operations available to a formula. Pow is the only non-commutative one.
enum class OpKind : std::uint8_t { Add, Mul, Pow };

inline constexpr std::array<OpKind, 3> kAllOps = {OpKind::Add, OpKind::Mul, OpKind::Pow};

constexpr char op_token(OpKind op) {
  switch (op) {
    case OpKind::Add: return '+';
    case OpKind::Mul: return '*';
    case OpKind::Pow: return '^';
  }
  return '?';
}

constexpr bool is_commutative(OpKind op) { return op != OpKind::Pow; }

// An operation alphabet. Addition is always present: without it only the
// integer 1 would be representable.
class OpSet {
 public:
  constexpr OpSet() = default;

  static constexpr OpSet a() { return OpSet(kAddBit); }
  static constexpr OpSet am() { return OpSet(kAddBit | kMulBit); }
  static constexpr OpSet ame() { return OpSet(kAddBit | kMulBit | kPowBit); }
  static constexpr OpSet ae() { return OpSet(kAddBit | kPowBit); }

  // Accepts "a", "am", "ame", "ae".
  static std::optional<OpSet> parse(std::string_view name);

  constexpr bool contains(OpKind op) const { return (bits_ & bit(op)) != 0; }
  constexpr bool is_subset_of(OpSet other) const {
    return (bits_ & other.bits_) == bits_;
  }

  std::string name() const;

  friend constexpr bool operator==(OpSet, OpSet) = default;

 private:
  static constexpr std::uint8_t kAddBit = 1;
  static constexpr std::uint8_t kMulBit = 2;
  static constexpr std::uint8_t kPowBit = 4;

  constexpr explicit OpSet(std::uint8_t bits) : bits_(bits) {}
  static constexpr std::uint8_t bit(OpKind op) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(op));
  }

  std::uint8_t bits_ = kAddBit | kMulBit | kPowBit;
};

}  // namespace onefold
