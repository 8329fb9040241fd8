#include "kahlerdeg/ideals.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kahlerdeg;

TEST(RelativeIdeal, MinimalGenerators) {
  NumericalSemigroup s({3, 4});
  RelativeIdeal i(s, {3, 5, 6, 7, 9});
  EXPECT_EQ(i.minimal_generators(), (std::vector<Int>{3, 5}));
  EXPECT_TRUE(i.contains(8));
  EXPECT_FALSE(i.contains(4));
}

TEST(RelativeIdeal, RelatorsOfThreeAndFive) {
  NumericalSemigroup s({3, 4});
  EXPECT_EQ(pair_relators(3, 5, s), (std::vector<std::pair<Int, Int>>{{6, 4}, {8, 6}}));
  auto k = kernel_generators(RelativeIdeal(s, {3, 5}));
  ASSERT_EQ(k.size(), 2u);
  EXPECT_EQ(k[0], (KernelRelator{0, 1, 6, 4}));
  EXPECT_EQ(k[1], (KernelRelator{0, 1, 8, 6}));
}

TEST(RelativeIdeal, RelatorsAgreeWithBruteForce) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> gen(2, 12), shift(0, 15);
  int done = 0;
  while (done < 80) {
    std::vector<Int> g{gen(rng), gen(rng), gen(rng)};
    if (std::gcd(std::gcd(g[0], g[1]), g[2]) != 1) continue;
    ++done;
    NumericalSemigroup s(g);
    Int a = shift(rng), b = shift(rng);
    if (a == b) continue;
    EXPECT_EQ(pair_relators(a, b, s), oracle::brute_relators(a, b, g, a + b + 3 * s.conductor() + 40));
  }
}

TEST(RelativeIdeal, IntersectionIsElementwise) {
  NumericalSemigroup s({5, 7, 9});
  RelativeIdeal i(s, {2, 4}), j(s, {3, 6});
  RelativeIdeal k = intersect(i, j);
  for (Int x = 0; x < 80; ++x) EXPECT_EQ(k.contains(x), i.contains(x) && j.contains(x)) << x;
  EXPECT_THROW(intersect(i, RelativeIdeal(NumericalSemigroup({2, 3}), {0})), std::invalid_argument);
}

TEST(RelativeIdeal, OverIdealsOfTwoThree) {
  NumericalSemigroup s({3, 4});
  auto ois = over_ideals(RelativeIdeal(s, {2, 3}));
  std::vector<std::vector<Int>> got;
  for (const auto& oi : ois) got.push_back(oi.minimal_generators());
  EXPECT_EQ(got, (std::vector<std::vector<Int>>{{2, 3}, {0, 1, 2}, {0, 2}, {1, 2, 3}, {2, 3, 4}}));
}

TEST(RelativeIdeal, OverIdealsAreClosedAndComplete) {
  NumericalSemigroup s({4, 5});
  RelativeIdeal base(s, {3, 5});
  auto ois = over_ideals(base);
  // Every subset of the complement below the bound that is closed under
  // adding generators must appear exactly once.
  std::vector<Int> holes;
  for (Int x = 0; x < base.cofinite_bound(); ++x)
    if (!base.contains(x)) holes.push_back(x);
  std::size_t closed = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << holes.size()); ++mask) {
    auto in = [&](Int x) {
      if (base.contains(x)) return true;
      for (std::size_t k = 0; k < holes.size(); ++k)
        if (holes[k] == x) return ((mask >> k) & 1) != 0;
      return false;
    };
    bool ok = true;
    for (std::size_t k = 0; k < holes.size() && ok; ++k)
      if ((mask >> k) & 1)
        for (Int g : s.minimal_generators()) ok = ok && in(holes[k] + g);
    if (ok) ++closed;
  }
  EXPECT_EQ(ois.size(), closed);
}
