#include <gtest/gtest.h>

#include "densitylab/core/errors.hpp"
#include "densitylab/spongy/spongy.hpp"

namespace dlab {
namespace {

const TriadicConfig kCfg{Rational(2), Rational(1, 12)};

TEST(Triadic, ChildrenFollowTheLayout) {
  for (const auto& node : build_level(kCfg, 2)) {
    Rational e = pow(kCfg.eps, 3);
    TriadicNode l = triadic_node(kCfg, node.s.child(-1));
    TriadicNode m = triadic_node(kCfg, node.s.child(0));
    TriadicNode r = triadic_node(kCfg, node.s.child(1));
    EXPECT_EQ(l.a, node.a);
    EXPECT_EQ(l.b, node.a + e);
    EXPECT_EQ(m.a, node.a + (Rational(1) + kCfg.M) * e);
    EXPECT_EQ(m.b, node.b - (Rational(1) + kCfg.M) * e);
    EXPECT_EQ(r.a, node.b - e);
    EXPECT_EQ(r.b, node.b);
  }
  EXPECT_EQ(build_level(kCfg, 4).size(), 81u);
}

TEST(Triadic, LevelsAreOrderedAndDisjoint) {
  auto level = build_level(kCfg, 4);
  for (std::size_t i = 0; i + 1 < level.size(); ++i) EXPECT_LT(level[i].b, level[i + 1].a);
}

TEST(Spongy, MeasureIsTheLimitOfStages) {
  Word root(Alphabet::Triadic);
  Rational m = spongy_measure(kCfg, root);
  EXPECT_EQ(m, Rational(5, 9));
  // Each stage overshoots by exactly the geometric remainder.
  Rational gap = stage_measure_in(kCfg, root, 0) - m;
  for (std::size_t d = 1; d < 6; ++d) {
    Rational next = stage_measure_in(kCfg, root, d) - m;
    EXPECT_EQ(next, gap * Rational(3) * kCfg.eps);
    gap = next;
  }
}

TEST(Spongy, ChainValuesForTheDefaultParameters) {
  EXPECT_EQ(spongy_f(kCfg), Rational(5, 18));
  GChain g = g_values(kCfg, Word::parse(Alphabet::Triadic, "0,1"));
  EXPECT_EQ(g.g_bs, Rational(5, 27));
  EXPECT_EQ(g.g_as1_upper, Rational(1, 25));
  EXPECT_TRUE(g.holds);
  EXPECT_TRUE(g_bs_series(kCfg, Word(Alphabet::Triadic), 20).contains(Rational(5, 27)));
  EXPECT_LE(g_as1_series(kCfg, Word(Alphabet::Triadic), 20).hi(), Rational(1, 25));
}

TEST(Spongy, WindowOverWholeRangeIsExact) {
  MeasureBounds b = spongy_window(kCfg, Rational(-1), Rational(2));
  EXPECT_EQ(b.lo(), Rational(5, 9));
  EXPECT_EQ(b.hi(), Rational(5, 9));
  // f: density at a_s for s ending in -1, radius eps^|s|.
  TriadicNode n = triadic_node(kCfg, Word::parse(Alphabet::Triadic, "-1"));
  MeasureBounds w = spongy_window(kCfg, n.a - kCfg.eps, n.a + kCfg.eps);
  EXPECT_TRUE(w.scale(Rational(1) / (Rational(2) * kCfg.eps)).contains(Rational(5, 18)));
}

TEST(Spongy, ComponentCodeFindsEndpoints) {
  TriadicNode n = triadic_node(kCfg, Word::parse(Alphabet::Triadic, "1,-1,0"));
  auto code = component_code(kCfg, n.a, 3);
  ASSERT_TRUE(code);
  EXPECT_EQ(code->str(), "1,-1,0");
  EXPECT_FALSE(component_code(kCfg, (Rational(1, 12) + Rational(1, 4)) / Rational(2), 1));
}

TEST(Spongy, FlanksAreClear) { EXPECT_FALSE(disjointness_failure(kCfg, 4)); }

TEST(Spongy, RejectsBadParameters) {
  EXPECT_THROW(spongy_measure(TriadicConfig{Rational(1), Rational(1, 12)}, Word(Alphabet::Triadic)), PreconditionError);
  EXPECT_THROW(spongy_measure(TriadicConfig{Rational(2), Rational(1, 5)}, Word(Alphabet::Triadic)), PreconditionError);
}

TEST(Spongy, VariantsHitTheirMeasure) {
  for (auto flavor : {Flavor::Open, Flavor::Closed}) {
    SpongyVariant v = spongy_variant(Rational(1, 3), flavor, EndpointOsc::Positive, 4);
    EXPECT_LE(abs(v.stage_measure - Rational(1, 3)), v.tail_bound);
    EXPECT_EQ(lebesgue(v.stage), v.stage_measure);
  }
  EXPECT_THROW(spongy_variant(Rational(1), Flavor::Open, EndpointOsc::Positive, 2), PreconditionError);
}

}  // namespace
}  // namespace dlab
