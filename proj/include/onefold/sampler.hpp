#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "onefold/bignat.hpp"
#include "onefold/enumeration.hpp"
#include "onefold/formula.hpp"

namespace onefold {

// Seedable stream of random bits with an exactly uniform draw below any BigNat.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, bound). Rejection over masked fixed-width draws, so there
  // is no modulo bias. Precondition: bound >= 1.
  BigNat uniform_below(const BigNat& bound);

 private:
  std::mt19937_64 engine_;
};

// One (root operation, split) choice when building a representation of n.
// width = total(left) * total(right) is the number of formulas it covers.
struct SelectionBlock {
  OpKind op;
  std::uint64_t left;
  std::uint64_t right;
  BigNat width;
};

// Blocks in draw order: additive splits by ascending k, then multiplicative by
// ascending i, then power splits by ascending j. Widths sum to total(n).
std::vector<SelectionBlock> selection_blocks(const CountTable& table, std::uint64_t n);

// A uniformly random representation of n over table.ops(). Throws
// std::out_of_range when n is not in the table.
Formula sample_formula(const CountTable& table, std::uint64_t n, RandomSource& rng);

std::vector<Formula> sample_many(const CountTable& table, std::uint64_t n, std::size_t count,
                                 std::uint64_t seed);

}  // namespace onefold
