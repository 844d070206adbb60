#include "onefold/stack_eval.hpp"

#include <gtest/gtest.h>

#include <random>

#include "onefold/error.hpp"
#include "onefold/notation.hpp"
#include "oracles.hpp"

namespace onefold {
namespace {

Formula two() { return Formula::add(Formula::one(), Formula::one()); }
Formula twenty_seven() {
  return Formula::pow(Formula::add(Formula::one(), two()), Formula::add(two(), Formula::one()));
}

std::size_t best_order_depth(const Formula& f) {
  std::size_t best = ~std::size_t{0};
  for (const auto& s : testing::all_operand_orders(f)) best = std::min(best, testing::simulate_depth(s));
  return best;
}

TEST(StrahlerTest, Examples) {
  EXPECT_EQ(strahler(Formula::one()), 1u);
  EXPECT_EQ(strahler(two()), 2u);
  EXPECT_EQ(strahler(twenty_seven()), 3u);
  EXPECT_EQ(strahler(Formula::add(Formula::one(), two())), 2u);
}

TEST(MinMemoryTest, Examples) {
  const auto leaf = min_memory_postfix(Formula::one());
  EXPECT_EQ(leaf.postfix, "1");
  EXPECT_EQ(leaf.depth, 1u);

  const auto three = min_memory_postfix(Formula::add(Formula::one(), two()));
  EXPECT_EQ(three.postfix, "11+1+");
  EXPECT_EQ(three.depth, 2u);
  EXPECT_EQ(natural_stack_depth(Formula::add(Formula::one(), two())), 3u);

  const auto e27 = min_memory_postfix(twenty_seven());
  EXPECT_EQ(e27.depth, 3u);
  EXPECT_EQ(e27.depth, best_order_depth(twenty_seven()));
  EXPECT_EQ(eval_postfix_with_depth(e27.postfix).value, 27);
  EXPECT_EQ(e27.postfix, "11+1+11+1+^");
}

TEST(MinMemoryTest, PowOperandsAreNeverSwapped) {
  // 3^(2^2) = 81, but (2^2)^3 = 64: the deeper exponent must stay second,
  // so the stack needs one slot more than the Strahler number.
  const Formula f = Formula::pow(Formula::add(Formula::one(), two()), Formula::pow(two(), two()));
  const auto e = min_memory_postfix(f);
  EXPECT_EQ(eval_postfix_with_depth(e.postfix).value, 81);
  EXPECT_EQ(e.depth, 4u);
  EXPECT_EQ(strahler(f), 3u);
}

TEST(MinMemoryTest, TiesKeepLeftFirst) {
  const Formula f = Formula::mul(two(), Formula::add(Formula::one(), Formula::one()));
  EXPECT_EQ(min_memory_postfix(f).reordered, f);
}

TEST(StackEvalTest, Examples) {
  auto r = eval_postfix_with_depth("111++11+1+^");
  EXPECT_EQ(r.value, 27);
  EXPECT_EQ(r.max_depth, 3u);
  r = eval_postfix_with_depth("1");
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.max_depth, 1u);
  r = eval_postfix_with_depth("11+11+*");
  EXPECT_EQ(r.value, 4);
  EXPECT_EQ(r.max_depth, 3u);
  EXPECT_EQ(testing::simulate_depth("11+11+*"), 3u);
}

TEST(StackEvalTest, ValidationAndCap) {
  auto code_of = [](std::string_view s, std::optional<BigNat> cap = std::nullopt) {
    try {
      eval_postfix_with_depth(s, cap);
    } catch (const FormulaError& e) {
      return e.code();
    }
    return FormulaErrc::InfixSyntax;
  };
  EXPECT_EQ(code_of("11+1*"), FormulaErrc::OneAsOperand);
  EXPECT_EQ(code_of("11++"), FormulaErrc::StackUnderflow);
  EXPECT_EQ(code_of("111+"), FormulaErrc::TrailingOperands);
  EXPECT_EQ(code_of("1a"), FormulaErrc::UnknownToken);
  EXPECT_EQ(code_of(""), FormulaErrc::EmptyInput);
  EXPECT_EQ(code_of("111++11+1+^", BigNat(26)), FormulaErrc::CapExceeded);
  EXPECT_EQ(eval_postfix_with_depth("111++11+1+^", BigNat(27)).value, 27);
}

TEST(StackEvalProperty, MinMemoryMatchesCostRecursionAndOracle) {
  std::mt19937_64 rng(99);
  for (OpSet ops : {OpSet::a(), OpSet::am(), OpSet::ame(), OpSet::ae()}) {
    for (int i = 0; i < 300; ++i) {
      const Formula f = testing::random_formula(rng, ops, 1 + rng() % 9);
      const auto e = min_memory_postfix(f);
      ASSERT_EQ(testing::simulate_depth(e.postfix), e.depth);
      ASSERT_EQ(e.depth, best_order_depth(f)) << to_postfix(f);
      ASSERT_LE(e.depth, natural_stack_depth(f));
      ASSERT_EQ(natural_stack_depth(f), testing::simulate_depth(to_postfix(f)));
      if (!f.contains(OpKind::Pow)) ASSERT_EQ(e.depth, strahler(f)) << to_postfix(f);
      ASSERT_GE(e.depth, strahler(f));
    }
  }
}

TEST(StackEvalProperty, MinMemoryPreservesValue) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const Formula f = testing::random_formula(rng, OpSet::ame(), 1 + rng() % 12);
    const auto e = min_memory_postfix(f);
    const auto before = evaluate(f, BigNat(1) << 4096);
    if (!before) continue;
    ASSERT_EQ(eval_postfix_with_depth(e.postfix).value, *before);
    ASSERT_EQ(eval_postfix_with_depth(e.postfix).max_depth, e.depth);
    ASSERT_EQ(evaluate(e.reordered), *before);
  }
}

}  // namespace
}  // namespace onefold
