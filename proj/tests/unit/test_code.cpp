#include <gtest/gtest.h>

#include <algorithm>
#include <bit>

#include "ethr/code.hpp"

namespace ethr {
namespace {

TEST(Code, SteaneGenerators) {
  auto c = steane();
  EXPECT_EQ(c.n(), 7u);
  EXPECT_EQ(c.k(), 1u);
  ASSERT_EQ(c.generators().size(), 6u);
  for (const auto& g : c.generators()) EXPECT_EQ(g.weight(), 4u);
  for (const auto& a : c.generators()) {
    for (const auto& b : c.generators()) EXPECT_TRUE(commutes(a, b));
  }
  EXPECT_EQ(c.generators()[0], PauliOperator::x_on(7, {1, 2, 3, 4}));
  EXPECT_EQ(c.generators()[1], PauliOperator::x_on(7, {1, 2, 5, 6}));
  EXPECT_EQ(c.generators()[2], PauliOperator::x_on(7, {1, 3, 5, 7}));
  EXPECT_EQ(c.generators()[3], PauliOperator::z_on(7, {1, 2, 3, 4}));
  EXPECT_EQ(c.logical_z()[0].weight(), 3u);
  EXPECT_EQ(c.logical_x()[0], PauliOperator::x_on(7, {5, 6, 7}));
}

TEST(Code, SteaneStabilizerGroup) {
  auto c = steane();
  const auto& g = c.stabilizer_group();
  EXPECT_EQ(g.size(), 64u);
  std::vector<std::uint64_t> x_type;
  for (const auto& s : g) {
    if (s.z_mask() == 0 && s.x_mask() != 0) x_type.push_back(s.x_mask());
  }
  ASSERT_EQ(x_type.size(), 7u);
  for (auto m : x_type) EXPECT_EQ(std::popcount(m), 4);
}

TEST(Code, NormalizerAndStabilizerMembership) {
  auto c = steane();
  auto zbar = PauliOperator::z_on(7, {5, 6, 7});
  EXPECT_TRUE(in_normalizer(c, zbar));
  EXPECT_FALSE(in_stabilizer(c, zbar));
  EXPECT_TRUE(in_stabilizer(c, PauliOperator::z_on(7, {1, 2, 3, 4})));
  EXPECT_FALSE(in_normalizer(c, PauliOperator::z_on(7, {1})));
  EXPECT_TRUE(in_stabilizer(c, PauliOperator::z_on(7, {1, 2, 3, 4}).with_phase(Phase::MinusOne)));
  EXPECT_FALSE(in_stabilizer(c, PauliOperator::z_on(7, {1, 2, 3, 4}).with_phase(Phase::PlusI)));
  EXPECT_THROW(in_normalizer(c, PauliOperator(3)), std::invalid_argument);
  for (const auto& s : c.stabilizer_group()) EXPECT_TRUE(in_normalizer(c, s));
}

TEST(Code, Grassl) {
  auto c = grassl();
  EXPECT_EQ(c.n(), 4u);
  EXPECT_EQ(c.k(), 2u);
  EXPECT_TRUE(commutes(c.generators()[0], c.generators()[1]));
  std::size_t min_weight = 99;
  for (const auto& l : c.logical_x()) min_weight = std::min(min_weight, l.weight());
  for (const auto& l : c.logical_z()) min_weight = std::min(min_weight, l.weight());
  EXPECT_EQ(min_weight, 2u);
}

TEST(Code, CssFromHammingGivesSteaneGenerators) {
  auto h = ClassicalCode::load(ETHR_TEST_DATA_DIR "/hamming7.txt");
  auto c = css_from_parity_check(h, "hamming");
  EXPECT_EQ(c.generators(), steane().generators());
  EXPECT_EQ(c.k(), 1u);
  EXPECT_TRUE(in_normalizer(c, c.logical_x()[0]));
  EXPECT_FALSE(in_stabilizer(c, c.logical_x()[0]));
}

TEST(Code, CssFromAllOnesGivesGrasslGenerators) {
  auto h = ClassicalCode::load(ETHR_TEST_DATA_DIR "/even4.txt");
  auto c = css_from_parity_check(h);
  EXPECT_EQ(c.generators(), grassl().generators());
  EXPECT_EQ(c.k(), 2u);
}

TEST(Code, CssRejectsBadInput) {
  EXPECT_THROW(ClassicalCode(4, {0b1111, 0}), std::invalid_argument);
  EXPECT_THROW(ClassicalCode::parse("1111\n0000\n"), std::invalid_argument);
  // Odd overlap: the dual is not inside the code.
  EXPECT_THROW(css_from_parity_check(ClassicalCode::parse("111\n")), std::invalid_argument);
  EXPECT_THROW(ClassicalCode::parse("1012\n"), std::invalid_argument);
  EXPECT_THROW(ClassicalCode::parse("101\n11\n"), std::invalid_argument);
}

TEST(Code, ConstructorValidation) {
  using P = PauliOperator;
  EXPECT_THROW(StabilizerCode("bad", 2, {P::from_string("XI"), P::from_string("ZI")}, {}, {}),
               std::invalid_argument);
  EXPECT_THROW(StabilizerCode("dep", 2, {P::from_string("XX"), P::from_string("XX")}, {}, {}),
               std::invalid_argument);
  EXPECT_THROW(StabilizerCode("log", 4, {P::from_string("XXXX"), P::from_string("ZZZZ")},
                              {P::from_string("XXII"), P::from_string("XIIX")},
                              {P::from_string("ZZII"), P::from_string("ZIIZ")}),
               std::invalid_argument);
}

}  // namespace
}  // namespace ethr
