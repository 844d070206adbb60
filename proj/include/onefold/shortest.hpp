#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "onefold/formula.hpp"
#include "onefold/op_set.hpp"

namespace onefold {

// For every n = 1..size(), a formula of minimal postfix length representing n.
//
// Ties are broken deterministically: root + before * before ^, then the
// smallest left operand value. Children are whatever witnesses the table
// already holds for them.
class ShortestTable {
 public:
  explicit ShortestTable(OpSet ops);

  OpSet ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return min_len_.size() - 1; }

  // Throw std::out_of_range unless 1 <= n <= size().
  std::size_t min_len(std::uint64_t n) const;
  const Formula& witness(std::uint64_t n) const;

  void extend_to(std::size_t n);

  // entries[0] describes n = 1. Caller guarantees each witness represents its n.
  static ShortestTable from_witnesses(OpSet ops, std::vector<Formula> witnesses);

  friend bool operator==(const ShortestTable&, const ShortestTable&) = default;

 private:
  void check(std::uint64_t n) const;

  OpSet ops_;
  std::vector<std::size_t> min_len_;  // index 0 unused
  std::vector<Formula> witness_;
};

ShortestTable build_shortest_table(OpSet ops, std::size_t n);

std::pair<Formula, std::size_t> shortest_formula(const ShortestTable& table, std::uint64_t n);

// The integer's computational complexity: its minimal postfix length.
std::size_t complexity(const ShortestTable& table, std::uint64_t n);

}  // namespace onefold
