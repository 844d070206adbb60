#pragma once

#include <cstddef>
#include <map>

#include "onefold/bignat.hpp"
#include "onefold/op_set.hpp"

namespace onefold {

// Exhaustive census: generates every valid formula over ops with at most
// max_tokens postfix tokens, evaluates it under value_cap, and counts the
// formulas per value. Values above the cap are dropped. This walks the grammar
// by leaf count and never consults the counting recurrences, so it serves as
// their oracle.
//
// Precondition: max_tokens odd and >= 1, value_cap >= 1.
std::map<BigNat, BigNat> brute_force_counts(OpSet ops, std::size_t max_tokens,
                                            const BigNat& value_cap);

}  // namespace onefold
