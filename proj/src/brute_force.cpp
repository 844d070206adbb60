#include "onefold/brute_force.hpp"

#include <algorithm>
#include <vector>

#include "onefold/formula.hpp"

namespace onefold {

namespace {

struct Candidate {
  Formula formula;
  BigNat value;
};

}  // namespace

std::map<BigNat, BigNat> brute_force_counts(OpSet ops, std::size_t max_tokens,
                                            const BigNat& value_cap) {
  std::map<BigNat, BigNat> counts;
  if (max_tokens == 0 || value_cap < 1) return counts;
  const std::size_t max_leaves = (max_tokens + 1) / 2;

  // by_leaves[L]: every in-range formula with exactly L leaves, sorted by value.
  // Each operation maps operands >= 1 to a result >= either operand, so an
  // out-of-range subformula can never be part of an in-range formula.
  std::vector<std::vector<Candidate>> by_leaves(max_leaves + 1);
  by_leaves[1].push_back({Formula::one(), BigNat(1)});

  for (std::size_t leaves = 2; leaves <= max_leaves; ++leaves) {
    auto& out = by_leaves[leaves];
    for (std::size_t left_leaves = 1; left_leaves < leaves; ++left_leaves) {
      const auto& lefts = by_leaves[left_leaves];
      const auto& rights = by_leaves[leaves - left_leaves];
      for (OpKind op : kAllOps) {
        if (!ops.contains(op)) continue;
        const bool needs_compound = op != OpKind::Add;
        for (const auto& l : lefts) {
          if (needs_compound && l.formula.is_leaf()) continue;
          for (const auto& r : rights) {
            if (needs_compound && r.formula.is_leaf()) continue;
            auto value = apply_capped(op, l.value, r.value, value_cap);
            // rights is sorted and every op is monotone in its right operand.
            if (!value) break;
            out.push_back({Formula::make(op, l.formula, r.formula), std::move(*value)});
          }
        }
      }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
  }

  for (const auto& bucket : by_leaves) {
    for (const auto& c : bucket) ++counts[c.value];
  }
  return counts;
}

}  // namespace onefold
