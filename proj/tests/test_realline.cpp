#include <gtest/gtest.h>

#include "densitylab/core/errors.hpp"
#include "densitylab/realline/examples.hpp"
#include "densitylab/realline/interval.hpp"

namespace dlab {
namespace {

Interval open(long a, long b, long d) { return Interval::open(Rational(a, d), Rational(b, d)); }

TEST(IntervalSet, MergesOverlapsAndKeepsGaps) {
  IntervalSet s({open(0, 2, 4), open(1, 3, 4), open(3, 4, 4)});
  ASSERT_EQ(s.parts().size(), 2u);  // the point 3/4 is missing
  EXPECT_FALSE(s.contains(Rational(3, 4)));
  EXPECT_EQ(lebesgue(s), Rational(1));
  IntervalSet t({Interval{Rational(0), Rational(1, 2), false, true}, open(1, 2, 2)});
  EXPECT_EQ(t.parts().size(), 1u);
}

TEST(IntervalSet, ComplementAndIntersection) {
  IntervalSet s({open(1, 2, 4)});
  IntervalSet c = s.complement_within(Rational(0), Rational(1));
  EXPECT_EQ(lebesgue(c), Rational(3, 4));
  EXPECT_TRUE(c.contains(Rational(1, 4)));
  EXPECT_TRUE(c.intersect(s).is_empty());
  EXPECT_EQ(lebesgue(s.unite(c)), Rational(1));
}

TEST(WindowRatio, HalfLineAtItsEndpoint) {
  IntervalSet s = IntervalSet::of(Interval::open(Rational(0), Rational(1)));
  for (long k = 1; k < 10; ++k) {
    EXPECT_EQ(window_ratio(s, Rational(0), Rational::pow2(-k)), Rational(1, 2));
    EXPECT_EQ(one_sided_ratio(s, Rational(0), Rational::pow2(-k), Side::Right), Rational(1));
    EXPECT_EQ(one_sided_ratio(s, Rational(0), Rational::pow2(-k), Side::Left), Rational(0));
  }
  EXPECT_THROW(window_ratio(s, Rational(0), Rational(0)), PreconditionError);
}

TEST(EndpointDensity, IsolatedEndpointsAndTouchingParts) {
  IntervalSet s({open(0, 1, 2), open(1, 2, 2), Interval::point(Rational(3))});
  for (const auto& e : endpoint_density_check(s)) {
    if (e.point == Rational(1, 2)) EXPECT_EQ(e.density, Rational(1));
    else if (e.point == Rational(3)) EXPECT_EQ(e.density, Rational(0));
    else EXPECT_EQ(e.density, Rational(1, 2));
  }
}

TEST(HalfDensity, WindowsAndOneSidedRatios) {
  IntervalSet a = example_halfdensity(10);
  for (long k = 1; k <= 8; ++k) {
    Rational h = Rational::pow2(-2 * k);
    EXPECT_EQ(window_ratio(a, Rational(0), h), Rational(1, 2)) << k;
  }
  // Right side carries 2/3 at scales 4^-k, 1/3 at 2 * 4^-k.
  EXPECT_EQ(one_sided_ratio(a, Rational(0), Rational::pow2(-4), Side::Right), Rational(2, 3));
  EXPECT_EQ(one_sided_ratio(a, Rational(0), Rational::pow2(-3), Side::Right), Rational(1, 3));
}

TEST(FatCantor, StageMeasureAndNodes) {
  FatCantorSchedule s;
  FatCantor fc = fat_cantor(s, 6);
  EXPECT_EQ(fc.stage.parts().size(), 64u);
  // Removed so far: sum_{m<6} 2^m eps_m; what is left is 2 minus that.
  Rational removed(0);
  for (std::size_t m = 0; m < 6; ++m) removed += Rational::pow2(static_cast<long>(m)) * s.eps(m);
  EXPECT_EQ(lebesgue(fc.stage), Rational(2) - removed);
  for (const auto& [w, u] : fc.nodes) {
    EXPECT_EQ(u, fat_cantor_node(s, w));
    EXPECT_EQ(fat_cantor_measure_in(s, w), Rational::pow2(-static_cast<long>(w.size())));
  }
  EXPECT_THROW(fat_cantor(FatCantorSchedule{Rational(1, 2), Rational(1, 3)}, 3), PreconditionError);
}

TEST(BasisCounterexample, RatiosAtBothScales) {
  std::vector<Rational> eps;
  for (long n = 0; n < 8; ++n) eps.push_back(Rational::pow2(-2 * n - 1));
  IntervalSet a = basis_counterexample(Rational(0), eps, 6);
  for (std::size_t n = 0; n < 6; ++n) {
    EXPECT_EQ(window_ratio(a, Rational(0), eps[n]), Rational(1, 2));
    Rational d = basis_midpoint(eps, n);
    EXPECT_EQ(window_ratio(a, Rational(0), d), Rational(1) / (eps[n + 1] / eps[n] + Rational(1)));
  }
}

}  // namespace
}  // namespace dlab
