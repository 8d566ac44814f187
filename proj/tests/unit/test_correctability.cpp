#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "ethr/correctability.hpp"

namespace ethr {
namespace {

// Complements of the weight-4 X-type stabilizer supports of steane() (1-based).
const std::set<std::set<int>> kLines{{1, 2, 7}, {1, 3, 6}, {1, 4, 5}, {2, 3, 5},
                                     {2, 4, 6}, {3, 4, 7}, {5, 6, 7}};

std::set<int> support_set(std::uint64_t m) {
  std::set<int> s;
  for (int q = 0; q < 64; ++q) {
    if (m >> q & 1u) s.insert(q + 1);
  }
  return s;
}

TEST(Correctability, ZCountsByWeight) {
  const auto c = steane();
  const std::size_t want[8] = {1, 7, 21, 28, 7, 0, 0, 0};
  const std::size_t total[8] = {1, 7, 21, 35, 35, 21, 7, 1};
  for (std::size_t w = 0; w <= 7; ++w) {
    EXPECT_EQ(count_correctable(c, w, ErasureMark::Z), (CorrectableCount{want[w], total[w]})) << w;
  }
}

TEST(Correctability, FullErasureCounts) {
  const auto c = steane();
  EXPECT_EQ(count_correctable(c, 1, ErasureMark::Full), (CorrectableCount{7, 7}));
  EXPECT_EQ(count_correctable(c, 2, ErasureMark::Full), (CorrectableCount{21, 21}));
  EXPECT_EQ(count_correctable(c, 3, ErasureMark::Full), (CorrectableCount{28, 35}));
}

TEST(Correctability, UncorrectableWeightThreeAreLines) {
  const auto c = steane();
  std::set<std::set<int>> bad;
  for (std::uint64_t m = 0; m < 128; ++m) {
    if (std::popcount(m) != 3) continue;
    if (!is_correctable(c, ErasurePattern::z_marks(7, m))) bad.insert(support_set(m));
  }
  EXPECT_EQ(bad, kLines);
}

TEST(Correctability, KnillLaflammeAgreesWithRankRouteOnEveryPattern) {
  const auto c = steane();
  for (std::uint64_t z = 0; z < 128; ++z) {
    for (std::uint64_t x = 0; x < 128; ++x) {
      ErasurePattern p(7, x, z);
      ASSERT_EQ(is_correctable(c, p), is_correctable_rank(c, p)) << p.str();
    }
  }
}

TEST(Correctability, RoutesAgreeOnGrassl) {
  const auto c = grassl();
  for (std::uint64_t z = 0; z < 16; ++z) {
    for (std::uint64_t x = 0; x < 16; ++x) {
      ErasurePattern p(4, x, z);
      EXPECT_EQ(is_correctable(c, p), is_correctable_rank(c, p)) << p.str();
    }
  }
  EXPECT_TRUE(is_correctable(c, ErasurePattern::from_string("E...")));
  EXPECT_FALSE(is_correctable(c, ErasurePattern::from_string("EE..")));
}

TEST(Correctability, TableMatchesDirectTest) {
  const auto c = steane();
  CorrectabilityTable t(c);
  for (std::uint64_t z = 0; z < 128; ++z) {
    for (std::uint64_t x = z; ; x = (x - 1) & z) {
      ErasurePattern p(7, x, z);
      EXPECT_EQ(t.correctable(p), is_correctable(c, p));
      if (x == 0) break;
    }
  }
}

TEST(Correctability, ReachableFractionAfterOneFailure) {
  auto r = reachable_fraction_after_one_failure(steane());
  EXPECT_EQ(r.fraction, mpq_class(2, 3));
  EXPECT_TRUE(r.uniform);
  std::size_t correctable = 0;
  std::size_t total = 0;
  for (const auto& ch : r.choices) {
    correctable += ch.correctable;
    total += ch.total;
  }
  EXPECT_EQ(correctable, 168u);
  EXPECT_EQ(total, 252u);
}

TEST(Correctability, SizeMismatch) {
  EXPECT_THROW(is_correctable(steane(), ErasurePattern(4)), std::invalid_argument);
}

}  // namespace
}  // namespace ethr
