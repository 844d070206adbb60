#include "onefold/enumeration.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace onefold {

namespace {

// r^k, or max() when it would not fit.
std::uint64_t saturating_pow(std::uint64_t r, unsigned k) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t out = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r != 0 && out > kMax / r) return kMax;
    out *= r;
  }
  return out;
}

void add_product(BigNat& acc, const BigNat& a, const BigNat& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

}  // namespace

std::uint64_t integer_root(std::uint64_t n, unsigned k) {
  if (k == 1 || n < 2) return n;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << ((64 + k - 1) / k);
  // Invariant: lo^k <= n < hi^k.
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (saturating_pow(mid, k) <= n) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::vector<Split> divisor_splits(std::uint64_t n) {
  std::vector<Split> out;
  for (std::uint64_t i = 2; i <= n / 2; ++i) {
    if (n % i == 0) out.emplace_back(i, n / i);
  }
  return out;
}

std::vector<Split> power_splits(std::uint64_t n) {
  std::vector<Split> out;
  for (unsigned j = 2; j < 64 && (std::uint64_t{1} << j) <= n; ++j) {
    const std::uint64_t i = integer_root(n, j);
    if (i >= 2 && saturating_pow(i, j) == n) out.emplace_back(i, j);
  }
  return out;
}

CountTable::CountTable(OpSet ops) : ops_(ops), rows_(1) {}

const CountRow& CountTable::row(std::uint64_t n) const {
  if (n < 1 || n > size()) {
    throw std::out_of_range("n=" + std::to_string(n) + " outside count table 1.." +
                            std::to_string(size()));
  }
  return rows_[n];
}

const BigNat& CountTable::rooted(OpKind op, std::uint64_t n) const {
  const CountRow& r = row(n);
  switch (op) {
    case OpKind::Add: return r.add_rooted;
    case OpKind::Mul: return r.mul_rooted;
    case OpKind::Pow: return r.pow_rooted;
  }
  return r.add_rooted;
}

std::vector<BigNat> CountTable::totals() const {
  std::vector<BigNat> out;
  out.reserve(size());
  for (std::size_t n = 1; n <= size(); ++n) out.push_back(rows_[n].total);
  return out;
}

void CountTable::extend_to(std::size_t n) {
  rows_.reserve(n + 1);
  for (std::size_t m = rows_.size(); m <= n; ++m) {
    CountRow r;
    if (m == 1) {
      r.total = 1;
      rows_.push_back(std::move(r));
      continue;
    }
    // Additive convolution is symmetric in k <-> m-k.
    for (std::size_t k = 1; 2 * k < m; ++k) {
      add_product(r.add_rooted, rows_[k].total, rows_[m - k].total);
    }
    r.add_rooted *= 2;
    if (m % 2 == 0) add_product(r.add_rooted, rows_[m / 2].total, rows_[m / 2].total);

    if (ops_.contains(OpKind::Mul)) {
      for (auto [i, q] : divisor_splits(m)) add_product(r.mul_rooted, rows_[i].total, rows_[q].total);
    }
    if (ops_.contains(OpKind::Pow)) {
      for (auto [i, j] : power_splits(m)) add_product(r.pow_rooted, rows_[i].total, rows_[j].total);
    }
    r.total = r.add_rooted + r.mul_rooted + r.pow_rooted;
    rows_.push_back(std::move(r));
  }
}

CountTable CountTable::from_rows(OpSet ops, std::vector<CountRow> rows) {
  CountTable t(ops);
  t.rows_.reserve(rows.size() + 1);
  for (auto& r : rows) t.rows_.push_back(std::move(r));
  return t;
}

CountTable build_count_table(OpSet ops, std::size_t n) {
  CountTable t(ops);
  t.extend_to(n);
  return t;
}

}  // namespace onefold
