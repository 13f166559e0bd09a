#include <gtest/gtest.h>

#include <random>

#include "densitylab/core/baire.hpp"
#include "densitylab/core/bounds.hpp"
#include "densitylab/core/errors.hpp"
#include "densitylab/core/rational.hpp"
#include "densitylab/core/tree.hpp"
#include "densitylab/core/word.hpp"

namespace dlab {
namespace {

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(Rational::parse("10/4").str(), "5/2");
  EXPECT_EQ(Rational::parse("-3").str(), "-3/1");
  EXPECT_EQ(Rational::parse("0/7").str(), "0/1");
  EXPECT_THROW(Rational::parse("1/x"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/0"), PreconditionError);
}

TEST(Rational, PowersOfTwo) {
  long e = 0;
  EXPECT_TRUE(Rational::pow2(-7).is_pow2(&e));
  EXPECT_EQ(e, -7);
  EXPECT_FALSE(Rational(3, 8).is_pow2(&e));
  EXPECT_EQ(Rational(3, 8).floor_log2(), -2);
  EXPECT_EQ(Rational(1, 4).floor_log2(), -2);
  EXPECT_EQ(Rational(5).floor_log2(), 2);
}

TEST(Rational, FieldLawsOnRandomValues) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 40);
  for (int i = 0; i < 200; ++i) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c(num(rng), den(rng));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
    EXPECT_EQ(Rational::parse(a.str()), a);
  }
}

TEST(Rational, DecimalApproximation) {
  EXPECT_EQ(Rational(1, 4).decimal(20), "0.25");
  EXPECT_EQ(Rational(1, 3).decimal(5).substr(0, 6), "0.3333");
}

TEST(Word, ParseAndOrder) {
  Word w = Word::parse(Alphabet::Triadic, "-1,0,1");
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], -1);
  EXPECT_EQ(w.str(), "-1,0,1");
  EXPECT_TRUE(Word::binary("01").is_prefix_of(Word::binary("011")));
  EXPECT_TRUE(Word::binary("01") < Word::binary("011"));
  EXPECT_THROW(Word::parse(Alphabet::Binary, "012"), ParseError);
}

TEST(Word, LengthLexEnumeration) {
  auto all = binary_words_upto(4);
  EXPECT_EQ(all.size(), 31u);
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    EXPECT_TRUE(length_lex_less(all[i], all[i + 1]));
    EXPECT_EQ(length_lex_next(all[i]), all[i + 1]);
  }
  EXPECT_EQ(binary_level(3).size(), 8u);
}

TEST(Bounds, ScaleFlipsOnNegative) {
  MeasureBounds b(Rational(1), Rational(2));
  MeasureBounds s = b.scale(Rational(-1));
  EXPECT_EQ(s.lo(), Rational(-2));
  EXPECT_EQ(s.hi(), Rational(-1));
  EXPECT_THROW(MeasureBounds(Rational(2), Rational(1)), PreconditionError);
  EXPECT_TRUE(b.hull(MeasureBounds(Rational(5))).contains(Rational(4)));
}

TEST(TreeMeasure, StandardMeasuresAreAdditive) {
  EXPECT_TRUE(tree_measure_check(cantor_measure(), PrunedTree::full_binary(), 8).ok);
  EXPECT_TRUE(tree_measure_check(bernoulli_measure(Rational(1, 3)), PrunedTree::full_binary(), 8).ok);
  EXPECT_TRUE(tree_measure_check(baire_measure(), PrunedTree::full_omega(), 4).ok);
  EXPECT_EQ(bernoulli_measure(Rational(1, 3)).weight(Word::binary("110")), Rational(2, 27));
}

TEST(TreeMeasure, DetectsNonAdditiveWeights) {
  TreeMeasure bad(Alphabet::Binary, [](const Word& s) { return s.size() == 2 ? Rational(1, 3) : Rational::pow2(-static_cast<long>(s.size())); });
  MeasureCheck c = tree_measure_check(bad, PrunedTree::full_binary(), 4);
  EXPECT_FALSE(c.ok);
}

TEST(Baire, IntervalsNestAndShareByIndex) {
  // Children of each node tile it with shares 2^-(k+1); the first K leave
  // exactly 2^-K of the parent.
  for (const auto& s : {Word(Alphabet::Natural), Word::parse(Alphabet::Natural, "2"), Word::parse(Alphabet::Natural, "0,3")}) {
    ClosedInterval p = baire_interval(s);
    Rational covered(0);
    for (int k = 0; k < 6; ++k) {
      ClosedInterval c = baire_interval(s.child(k));
      EXPECT_LE(p.lo, c.lo);
      EXPECT_LE(c.hi, p.hi);
      EXPECT_EQ(c.length(), p.length() * Rational::pow2(-(k + 1)));
      covered += c.length();
    }
    EXPECT_EQ(p.length() - covered, p.length() * Rational::pow2(-6));
  }
}

}  // namespace
}  // namespace dlab
