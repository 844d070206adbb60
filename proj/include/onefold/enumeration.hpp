#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "onefold/bignat.hpp"
#include "onefold/op_set.hpp"

namespace onefold {

using Split = std::pair<std::uint64_t, std::uint64_t>;

// (i, n/i) for every divisor 2 <= i <= n/2, ascending in i.
std::vector<Split> divisor_splits(std::uint64_t n);

// (i, j) with i >= 2, j >= 2 and i^j == n exactly, ascending in j.
std::vector<Split> power_splits(std::uint64_t n);

// Largest r with r^k <= n (k >= 1), by exact integer arithmetic.
std::uint64_t integer_root(std::uint64_t n, unsigned k);

struct CountRow {
  BigNat total;
  BigNat add_rooted;
  BigNat mul_rooted;
  BigNat pow_rooted;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

// Exact number of representations of each n = 1..size() over an operation set,
// split by the operation at the root.
class CountTable {
 public:
  explicit CountTable(OpSet ops);

  OpSet ops() const noexcept { return ops_; }
  std::size_t size() const noexcept { return rows_.size() - 1; }

  // Throw std::out_of_range unless 1 <= n <= size().
  const CountRow& row(std::uint64_t n) const;
  const BigNat& total(std::uint64_t n) const { return row(n).total; }
  const BigNat& rooted(OpKind op, std::uint64_t n) const;

  // total(1..size()) as a dense sequence starting at index 0.
  std::vector<BigNat> totals() const;

  // Fills rows size()+1..n bottom-up. No-op when n <= size().
  void extend_to(std::size_t n);

  // Rebuilds a table from trusted rows 1..k (rows[0] is row 1).
  static CountTable from_rows(OpSet ops, std::vector<CountRow> rows);

  friend bool operator==(const CountTable&, const CountTable&) = default;

 private:
  OpSet ops_;
  std::vector<CountRow> rows_;  // rows_[0] unused
};

CountTable build_count_table(OpSet ops, std::size_t n);

}  // namespace onefold
