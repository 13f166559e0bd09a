#include <gtest/gtest.h>

#include <bitset>
#include <random>

#include "densitylab/cantor/approx.hpp"
#include "densitylab/cantor/cylinder.hpp"
#include "densitylab/cantor/density.hpp"
#include "densitylab/cantor/thin.hpp"
#include "densitylab/core/errors.hpp"

namespace dlab {
namespace {

constexpr std::size_t kBits = 10;
using Mask = std::bitset<1 << kBits>;

// The set of length-kBits words covered, as a bitmask.
Mask mask_of(const CylinderSet& c) {
  Mask m;
  for (const Word& g : c.generators()) {
    std::size_t base = 0;
    for (std::size_t i = 0; i < g.size(); ++i) base = base * 2 + static_cast<std::size_t>(g[i]);
    std::size_t free = kBits - g.size();
    for (std::size_t t = 0; t < (std::size_t{1} << free); ++t) m.set((base << free) | t);
  }
  return m;
}

CylinderSet random_set(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6), bit(0, 1), count(0, 5);
  std::vector<Word> gens;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Word w;
    int l = len(rng);
    for (int j = 0; j < l; ++j) w.push_back(bit(rng));
    gens.push_back(w);
  }
  return CylinderSet(gens);
}

TEST(CylinderSet, BooleanAlgebraMatchesBitsets) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    CylinderSet a = random_set(rng), b = random_set(rng);
    EXPECT_EQ(mask_of(a.unite(b)), mask_of(a) | mask_of(b));
    EXPECT_EQ(mask_of(a.intersect(b)), mask_of(a) & mask_of(b));
    EXPECT_EQ(mask_of(a.complement()), ~mask_of(a));
    EXPECT_EQ(mask_of(a.minus(b)), mask_of(a) & ~mask_of(b));
    // Canonical form: equal sets compare equal.
    EXPECT_EQ(a.unite(b), b.unite(a));
    EXPECT_EQ(a.complement().complement(), a);
    // Measure is the fraction of covered words.
    EXPECT_EQ(a.measure(cantor_measure()), Rational(static_cast<long>(mask_of(a).count()), 1L << kBits));
  }
}

TEST(CylinderSet, MergesSiblings) {
  CylinderSet c({Word::binary("00"), Word::binary("01"), Word::binary("1")});
  EXPECT_TRUE(c.is_full());
  EXPECT_TRUE(CylinderSet({Word::binary("0"), Word::binary("01")}) == CylinderSet::cylinder(Word::binary("0")));
}

TEST(CylinderSet, LocalizeAndMeasureIn) {
  CylinderSet a({Word::binary("010"), Word::binary("11")});
  EXPECT_EQ(a.localize(Word::binary("01")), CylinderSet::cylinder(Word::binary("0")));
  EXPECT_EQ(a.measure_in(Word::binary("1"), cantor_measure()), Rational(1, 4));
  MeasuredSet m(a, cantor_measure());
  for (const Word& v : binary_words_upto(4)) EXPECT_EQ(m.measure_in(v), a.measure_in(v, cantor_measure()));
  EXPECT_TRUE(a.meets(Word::binary("0")));
  EXPECT_FALSE(a.covers(Word::binary("0")));
  EXPECT_TRUE(a.covers(Word::binary("0101")));
}

TEST(CylinderSet, BernoulliMeasureMatchesPointSum) {
  TreeMeasure w = bernoulli_measure(Rational(1, 3));
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    CylinderSet a = random_set(rng);
    Rational sum(0);
    for (const Word& x : binary_level(6))
      if (a.covers(x)) sum += w.weight(x);
    EXPECT_EQ(a.measure(w), sum);
  }
}

TEST(Density, ProfileOfClopenSet) {
  CylinderSet a({Word::binary("00"), Word::binary("011")});
  auto p = density_profile(a, Word::binary("0110"), cantor_measure());
  ASSERT_EQ(p.size(), 5u);
  EXPECT_EQ(p[0], Rational(3, 8));
  EXPECT_EQ(p[1], Rational(3, 4));
  EXPECT_EQ(p[2], Rational(1, 2));
  EXPECT_EQ(p[3], Rational(1));
  EXPECT_EQ(p[4], Rational(1));
}

TEST(ThinCompact, StagesShrinkAndEnclosureIsSound) {
  auto k = std::make_shared<ThinCompact>(Word::binary("01"), Rational(1, 16));
  ApproxSet a(k);
  Rational prev = Rational(1, 4);
  for (std::size_t d = 2; d <= 9; ++d) {
    Rational m = a.stage(d).measure(cantor_measure());
    EXPECT_LE(m, prev);
    prev = m;
    MeasureBounds b = a.measure_bounds(d);
    // Total removal is at most eps / 2, so the measure is at least 1/4 - 1/32.
    EXPECT_GE(b.hi(), Rational(1, 4) - Rational(1, 32));
    EXPECT_LE(b.lo(), m);
    EXPECT_GE(b.lo(), Rational(1, 4) - Rational(1, 32));
  }
}

TEST(ThinCompact, EveryActiveWordLosesACylinder) {
  ThinCompact k(Word::binary("1"), Rational(1, 8));
  auto removed = CylinderSet(k.removals(6));
  // No cylinder at or below home stays inside the compact.
  for (const Word& x : binary_level(6)) {
    if (!Word::binary("1").is_prefix_of(x)) continue;
    EXPECT_TRUE(removed.meets(x)) << x.str();
  }
  for (const Word& r : k.removals(6)) EXPECT_TRUE(k.certified_disjoint(r));
}

TEST(ThinCompact, RejectsBadEps) {
  EXPECT_THROW(compact_thin(Word::binary("0"), Rational(1, 2)), PreconditionError);
  EXPECT_THROW(compact_thin(Word::binary("0"), Rational(0)), PreconditionError);
}

TEST(ThickCothick, SmallUnionIsCertifiedEverywhere) {
  ThickCothick tc = thick_cothick_sigma(cantor_measure(), 3);
  ThicknessCertificate c = thickness_certificate(tc.set, CylinderSet::full(), 3);
  EXPECT_EQ(c.thick, Verdict::Yes);
  EXPECT_EQ(c.cothick, Verdict::Yes);
  EXPECT_LE(tc.set.measure_bounds(3).hi(), Rational(1, 2));
}

TEST(ThicknessCertificate, NeverAnswersYesForEmptyOrFull) {
  auto empty = ApproxSet::clopen(CylinderSet::empty());
  auto full = ApproxSet::clopen(CylinderSet::full());
  EXPECT_EQ(thickness_certificate(empty, CylinderSet::full(), 4).thick, Verdict::Unknown);
  EXPECT_EQ(thickness_certificate(full, CylinderSet::full(), 4).cothick, Verdict::Unknown);
}

TEST(DensityTree, ClopenBodyRecoversSet) {
  CylinderSet a({Word::binary("01"), Word::binary("110")});
  DensityTree t = density_tree(ApproxSet::clopen(a), 5);
  EXPECT_EQ(density_tree_body(t), a);
  EXPECT_EQ(t.at(Word::binary("00")), NodeFlag::Zero);
  EXPECT_EQ(t.at(Word::binary("1")), NodeFlag::Positive);
}

TEST(MuOperators, ClopenSetSplitsCleanly) {
  CylinderSet a({Word::binary("0"), Word::binary("101")});
  MuOperators m = mu_operators(ApproxSet::clopen(a), 4);
  EXPECT_EQ(m.interior, a);
  EXPECT_EQ(m.closure_complement, a.complement());
  EXPECT_TRUE(m.frontier.is_empty());
}

TEST(AlternatingAnnuli, DensityOscillatesAlongZero) {
  ApproxSet a = alternating_annuli([](std::size_t k) { return 2 * k + 1; });
  DensityBounds b = density_bounds(a, Word::zeros(16), 16);
  EXPECT_FALSE(b.inconclusive);
  EXPECT_LT(b.liminf.hi(), b.limsup.lo());
}

}  // namespace
}  // namespace dlab
