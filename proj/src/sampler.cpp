#include "onefold/sampler.hpp"

#include <stdexcept>
#include <string>

namespace onefold {

BigNat RandomSource::uniform_below(const BigNat& bound) {
  if (bound < 1) throw std::invalid_argument("uniform_below needs a positive bound");
  const std::size_t bits = bit_length(bound);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - 64 * (words - 1));
  const std::uint64_t top_mask = top_bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << top_bits) - 1;
  std::vector<std::uint64_t> buf(words);
  BigNat out;
  while (true) {
    for (auto& w : buf) w = next_u64();
    buf.back() &= top_mask;  // most significant word, little-endian word order
    mpz_import(out.get_mpz_t(), words, -1, sizeof(std::uint64_t), 0, 0, buf.data());
    if (out < bound) return out;
  }
}

namespace {

template <typename Visit>
void for_each_block(const CountTable& table, std::uint64_t n, Visit&& visit) {
  const OpSet ops = table.ops();
  BigNat width;
  for (std::uint64_t k = 1; k < n; ++k) {
    width = table.total(k) * table.total(n - k);
    if (!visit(OpKind::Add, k, n - k, width)) return;
  }
  if (ops.contains(OpKind::Mul)) {
    for (auto [i, q] : divisor_splits(n)) {
      width = table.total(i) * table.total(q);
      if (!visit(OpKind::Mul, i, q, width)) return;
    }
  }
  if (ops.contains(OpKind::Pow)) {
    for (auto [i, j] : power_splits(n)) {
      width = table.total(i) * table.total(j);
      if (!visit(OpKind::Pow, i, j, width)) return;
    }
  }
}

}  // namespace

std::vector<SelectionBlock> selection_blocks(const CountTable& table, std::uint64_t n) {
  table.row(n);
  std::vector<SelectionBlock> out;
  for_each_block(table, n, [&](OpKind op, std::uint64_t l, std::uint64_t r, const BigNat& w) {
    out.push_back({op, l, r, w});
    return true;
  });
  return out;
}

Formula sample_formula(const CountTable& table, std::uint64_t n, RandomSource& rng) {
  const BigNat& total = table.total(n);
  if (n == 1) return Formula::one();
  BigNat draw = rng.uniform_below(total);
  OpKind op = OpKind::Add;
  std::uint64_t left = 0;
  std::uint64_t right = 0;
  for_each_block(table, n, [&](OpKind o, std::uint64_t l, std::uint64_t r, const BigNat& w) {
    if (draw < w) {
      op = o;
      left = l;
      right = r;
      return false;
    }
    draw -= w;
    return true;
  });
  if (left == 0) throw std::logic_error("count table rows do not match their splits");
  Formula lhs = sample_formula(table, left, rng);
  Formula rhs = sample_formula(table, right, rng);
  return Formula::make(op, std::move(lhs), std::move(rhs));
}

std::vector<Formula> sample_many(const CountTable& table, std::uint64_t n, std::size_t count,
                                 std::uint64_t seed) {
  table.row(n);
  RandomSource rng(seed);
  std::vector<Formula> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sample_formula(table, n, rng));
  return out;
}

}  // namespace onefold
