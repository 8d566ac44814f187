#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>

#include "ethr/erasure.hpp"

namespace ethr {
namespace {

ErasurePattern random_pattern(std::mt19937_64& rng, std::size_t n) {
  std::uint64_t z = rng() & low_bits(n);
  std::uint64_t x = rng() & z;
  return {n, x, z};
}

TEST(Erasure, ComposeRules) {
  auto z1 = ErasurePattern::from_string("Z......");
  auto e1 = ErasurePattern::from_string("E......");
  auto z2 = ErasurePattern::from_string(".Z.....");
  EXPECT_EQ(compose(z1, z1), z1);
  EXPECT_EQ(compose(z1, e1), e1);
  EXPECT_EQ(compose(e1, z1), e1);
  EXPECT_EQ(compose(z1, z2).weight(), 2u);
  EXPECT_EQ(compose(ErasureMark::X, ErasureMark::Z), ErasureMark::Full);
  EXPECT_THROW(compose(z1, ErasurePattern(3)), std::invalid_argument);
}

TEST(Erasure, ComposeAlgebra) {
  std::mt19937_64 rng(9);
  const ErasurePattern clean(7);
  for (int i = 0; i < 200; ++i) {
    auto a = random_pattern(rng, 7);
    auto b = random_pattern(rng, 7);
    auto c = random_pattern(rng, 7);
    EXPECT_EQ(compose(a, b), compose(b, a));
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(compose(a, clean), a);
  }
}

TEST(Erasure, CompatiblePaulisOfMixedPattern) {
  auto ops = compatible_paulis(ErasurePattern::from_string("Z.....E"));
  std::set<std::string> got;
  for (const auto& p : ops) got.insert(p.str());
  std::set<std::string> want{"IIIIIII", "ZIIIIII", "IIIIIIX", "IIIIIIY",
                             "IIIIIIZ", "ZIIIIIX", "ZIIIIIY", "ZIIIIIZ"};
  EXPECT_EQ(got, want);
  EXPECT_TRUE(ops.front().is_identity());
}

TEST(Erasure, CompatiblePaulisCounts) {
  EXPECT_EQ(compatible_paulis(ErasurePattern(7)).size(), 1u);
  auto full = compatible_paulis(ErasurePattern::from_string("..E"));
  std::set<std::string> got;
  for (const auto& p : full) got.insert(p.str());
  EXPECT_EQ(got, (std::set<std::string>{"III", "IIX", "IIY", "IIZ"}));

  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    auto p = random_pattern(rng, 7);
    auto ops = compatible_paulis(p);
    std::size_t expected = std::size_t{1} << (std::popcount(p.z_only_mask()) + 2 * std::popcount(p.full_mask()));
    EXPECT_EQ(ops.size(), expected);
    for (const auto& a : ops) EXPECT_EQ(a.support() & ~p.support(), 0u);
  }
}

TEST(Erasure, ClassifyTuple) {
  EXPECT_EQ(classify_tuple(ErasurePattern::from_string("EZ.....")), (ClassTuple{1, 1}));
  EXPECT_EQ(classify_tuple(ErasurePattern(7)), (ClassTuple{0, 0}));
  EXPECT_EQ(classify_tuple(ErasurePattern::from_string("ZZZ....")), (ClassTuple{0, 3}));
  EXPECT_THROW(classify_tuple(ErasurePattern::from_string("X......")), std::invalid_argument);
  EXPECT_EQ((ClassTuple{2, 1}).str(), "[2,1]");
}

TEST(Erasure, StringRoundTrip) {
  auto p = ErasurePattern::from_string("E.Z.X..");
  EXPECT_EQ(p.str(), "E.Z.X..");
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.mark(0), ErasureMark::Full);
  EXPECT_EQ(p.mark(2), ErasureMark::Z);
  EXPECT_EQ(p.mark(4), ErasureMark::X);
  EXPECT_THROW(ErasurePattern::from_string("E?"), std::invalid_argument);
  EXPECT_THROW(p.mark(7), std::out_of_range);
}

}  // namespace
}  // namespace ethr
