#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "onefold/bignat.hpp"
#include "onefold/formula.hpp"

namespace onefold {

// Horton-Strahler number: 1 for a leaf; for a node the larger child rank if
// they differ, else one more than the common rank.
std::size_t strahler(const Formula& f);

struct MinMemoryEmission {
  Formula reordered;    // f with operands of + and * possibly swapped
  std::string postfix;  // to_postfix(reordered)
  std::size_t depth;    // peak stack occupancy when evaluating postfix
};

// Emits f so that a plain stack machine needs as few slots as possible.
// Operands of + and * may be swapped (deeper side first, left first on ties);
// ^ always keeps base before exponent, so for ^-bearing formulas the depth can
// exceed the Strahler number.
MinMemoryEmission min_memory_postfix(const Formula& f);

// Slots needed to evaluate to_postfix(f) as written, without any reordering.
std::size_t natural_stack_depth(const Formula& f);

struct StackEvaluation {
  BigNat value;
  std::size_t max_depth;
};

// Runs an RPN stack machine over text. Validation errors match from_postfix;
// when cap is given, any intermediate value above it raises CapExceeded.
StackEvaluation eval_postfix_with_depth(std::string_view text,
                                        const std::optional<BigNat>& cap = std::nullopt);

}  // namespace onefold
