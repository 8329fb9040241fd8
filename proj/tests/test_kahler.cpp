#include "kahlerdeg/kahler.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kahlerdeg;

namespace {

DifferentialReport report(const char* x, const char* y) {
  return curve_invariants(CurveParametrization(parse_poly(x), parse_poly(y)));
}

}  // namespace

TEST(Kahler, LatticeOfThreeFourRealized) {
  struct Case {
    const char* x;
    const char* y;
    const char* basis;
    std::vector<Int> ideal;
    std::vector<Int> ne;
  };
  const Case cases[] = {
      {"t^3", "t^4", "[ t^2, t^3 ]", {2, 3}, {}},
      {"t^3+t^2", "t^4", "[ t^2+2/3*t, t^3, t^4 ]", {2, 3, 4}, {4}},
      {"t^3", "t^4+t", "[ 1, t^2 ]", {0, 2}, {0, 4}},
      {"t^3", "t^4+t^2", "[ t, t^2, t^3 ]", {1, 2, 3}, {1, 4}},
      {"t^3+t", "t^4", "[ 1, t, t^2 ]", {0, 1, 2}, {0, 1, 4}},
  };
  for (const auto& c : cases) {
    DifferentialReport r = report(c.x, c.y);
    EXPECT_EQ(render_list(r.differentials), c.basis) << c.x << ", " << c.y;
    EXPECT_EQ(r.ideal.minimal_generators(), c.ideal);
    EXPECT_EQ(r.ne_set, c.ne);
    EXPECT_EQ(r.mu, 6);
    EXPECT_EQ(r.nu, 6 - static_cast<Int>(c.ne.size()));
  }
}

TEST(Kahler, EitherArgumentOrder) {
  DifferentialReport a = report("t^3+t", "t^4");
  DifferentialReport b = report("t^4", "t^3+t");
  EXPECT_EQ(a.ne_set, b.ne_set);
  EXPECT_EQ(a.differentials, b.differentials);
}

TEST(Kahler, InputErrors) {
  EXPECT_THROW(CurveParametrization(parse_poly("t^3"), parse_poly("t^3+t")), std::invalid_argument);
  EXPECT_THROW(CurveParametrization(parse_poly("4"), parse_poly("t^3")), std::invalid_argument);
  EXPECT_THROW(curve_invariants(CurveParametrization(parse_poly("t^4"), parse_poly("t^6"))), NonNumericalError);
}

TEST(Kahler, QuasiHomogeneousMonomialCurves) {
  for (Int m = 2; m < 7; ++m) {
    for (Int n = m + 1; n < 12; ++n) {
      if (std::gcd(m, n) != 1) continue;
      DifferentialReport r = curve_invariants(CurveParametrization(Poly::power(n), Poly::power(m)));
      EXPECT_EQ(r.ne, 0);
      EXPECT_TRUE(r.quasi_homogeneous);
      EXPECT_EQ(r.mu, (m - 1) * (n - 1));
      ASSERT_TRUE(r.free.has_value());
    }
  }
}

TEST(Kahler, CenteringShiftIsHarmless) {
  auto c = CurveParametrization(parse_poly("t^7+t^2"), parse_poly("t^4+2*t^3+t"));
  auto cc = c.centered();
  EXPECT_EQ(cc.low().coefficient(3), 0);
  DifferentialReport a = curve_invariants(c), b = curve_invariants(cc);
  EXPECT_EQ(a.ne_set, b.ne_set);
  EXPECT_EQ(a.gamma, b.gamma);
}

TEST(Kahler, NonExactSetMatchesDefinition) {
  NumericalSemigroup s({3, 4});
  RelativeIdeal i(s, {0, 2});
  EXPECT_EQ(non_exact_set(i, s), (std::vector<Int>{0, 4}));
}

TEST(Kahler, RandomInvariantsSmallSample) {
  std::mt19937_64 rng(404);
  for (int k = 0; k < 20; ++k) {
    auto p = oracle::random_curve(rng, 6, 11);
    DifferentialReport r = curve_invariants(p);
    EXPECT_LE(r.ne, r.gamma.genus());
    EXPECT_EQ(r.nu, r.mu - r.ne);
    for (Int s = 1; s <= r.gamma.conductor() + r.m; ++s) {
      if (r.gamma.contains(s)) {
        EXPECT_TRUE(r.ideal.contains(s - 1)) << s;
      }
    }
    for (Int i : r.ne_set) {
      EXPECT_TRUE(r.ideal.contains(i));
      EXPECT_FALSE(r.gamma.contains(i + 1));
    }
  }
}
