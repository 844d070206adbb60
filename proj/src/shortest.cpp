#include "onefold/shortest.hpp"

#include <stdexcept>
#include <string>

#include "onefold/enumeration.hpp"

namespace onefold {

ShortestTable::ShortestTable(OpSet ops) : ops_(ops), min_len_(1, 0), witness_(1) {}

void ShortestTable::check(std::uint64_t n) const {
  if (n < 1 || n > size()) {
    throw std::out_of_range("n=" + std::to_string(n) + " outside shortest table 1.." +
                            std::to_string(size()));
  }
}

std::size_t ShortestTable::min_len(std::uint64_t n) const {
  check(n);
  return min_len_[n];
}

const Formula& ShortestTable::witness(std::uint64_t n) const {
  check(n);
  return witness_[n];
}

void ShortestTable::extend_to(std::size_t n) {
  min_len_.reserve(n + 1);
  witness_.reserve(n + 1);
  for (std::size_t m = min_len_.size(); m <= n; ++m) {
    if (m == 1) {
      min_len_.push_back(1);
      witness_.push_back(Formula::one());
      continue;
    }
    OpKind best_op = OpKind::Add;
    std::uint64_t best_left = 0;
    std::uint64_t best_right = 0;
    std::size_t best = 0;
    auto consider = [&](OpKind op, std::uint64_t l, std::uint64_t r) {
      const std::size_t len = min_len_[l] + min_len_[r] + 1;
      if (best_left == 0 || len < best) {
        best = len;
        best_op = op;
        best_left = l;
        best_right = r;
      }
    };
    // The length is symmetric in the split, so k <= m/2 finds every optimum
    // and the smallest left value first.
    for (std::uint64_t k = 1; 2 * k <= m; ++k) consider(OpKind::Add, k, m - k);
    if (ops_.contains(OpKind::Mul)) {
      for (auto [i, q] : divisor_splits(m)) consider(OpKind::Mul, i, q);
    }
    if (ops_.contains(OpKind::Pow)) {
      // Ascending base, the reverse of power_splits' order.
      const auto splits = power_splits(m);
      for (auto it = splits.rbegin(); it != splits.rend(); ++it) consider(OpKind::Pow, it->first, it->second);
    }
    min_len_.push_back(best);
    witness_.push_back(Formula::make(best_op, witness_[best_left], witness_[best_right]));
  }
}

ShortestTable ShortestTable::from_witnesses(OpSet ops, std::vector<Formula> witnesses) {
  ShortestTable t(ops);
  t.min_len_.reserve(witnesses.size() + 1);
  t.witness_.reserve(witnesses.size() + 1);
  for (auto& w : witnesses) {
    t.min_len_.push_back(w.token_length());
    t.witness_.push_back(std::move(w));
  }
  return t;
}

ShortestTable build_shortest_table(OpSet ops, std::size_t n) {
  ShortestTable t(ops);
  t.extend_to(n);
  return t;
}

std::pair<Formula, std::size_t> shortest_formula(const ShortestTable& table, std::uint64_t n) {
  return {table.witness(n), table.min_len(n)};
}

std::size_t complexity(const ShortestTable& table, std::uint64_t n) { return table.min_len(n); }

}  // namespace onefold
