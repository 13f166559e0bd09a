#include <gtest/gtest.h>

#include "densitylab/core/errors.hpp"
#include "densitylab/reductions/compact.hpp"
#include "densitylab/reductions/matrix.hpp"
#include "densitylab/reductions/sharp.hpp"

namespace dlab {
namespace {

TEST(Matrix, SpecsAndTailRules) {
  MatrixCode z = MatrixCode::parse_code("rowones:1:3");
  EXPECT_EQ(z.size(), 3u);
  EXPECT_EQ(z.at(1, 100), 1);
  EXPECT_EQ(z.at(0, 100), 0);
  EXPECT_EQ(z.row_bound(0), 0u);
  EXPECT_EQ(z.row_bound(1), MatrixCode::npos);
  EXPECT_EQ(z.least_infinite_row(), 1u);
  EXPECT_FALSE(p3_membership(z));
  EXPECT_TRUE(p3_membership(MatrixCode::parse_code("allzero:5")));
  EXPECT_THROW(MatrixCode::parse_code("rowones:1"), ParseError);
  EXPECT_THROW(MatrixCode::parse_code("junk"), ParseError);
}

TEST(Matrix, RowBoundOfFiniteRows) {
  MatrixCode z({{0, 1, 0}, {0, 0, 0}, {1, 0, 1}});
  EXPECT_EQ(z.row_bound(0), 2u);
  EXPECT_EQ(z.row_bound(1), 0u);
  EXPECT_EQ(z.row_bound(2), 3u);
  EXPECT_TRUE(p3_membership(z));
  EXPECT_THROW(MatrixCode({{0, 1}, {0}}), PreconditionError);
}

TEST(Matrix, GammaReadsTheLastColumn) {
  EXPECT_EQ(gamma({}), 0u);
  EXPECT_EQ(gamma({{0, 0}, {0, 0}}), 2u);
  EXPECT_EQ(gamma({{0, 0}, {0, 1}}), 1u);
  EXPECT_EQ(gamma({{0, 1}, {0, 1}}), 0u);
  BitMatrix a{{1, 0}, {0, 1}}, b{{1, 0, 0}, {0, 1, 1}, {0, 0, 0}};
  EXPECT_TRUE(is_corner(a, b));
  EXPECT_FALSE(is_corner(b, a));
}

TEST(Matrix, DoublingPreservesRowFiniteness) {
  for (const char* code : {"allzero:3", "rowones:0:3", "rowones:2:4"}) {
    MatrixCode z = MatrixCode::parse_code(code);
    MatrixCode d = doubling_transform(z);
    EXPECT_EQ(p3_membership(d), p3_membership(z)) << code;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 12; ++j) {
        EXPECT_EQ(d.at(2 * i, 2 * j), z.at(i, j));
        EXPECT_EQ(d.at(2 * i + 1, 2 * j + 1), z.at(i, j));
        EXPECT_EQ(d.at(2 * i, 2 * j + 1), 0);
      }
  }
}

TEST(GoodTree, BlocksAndReparse) {
  auto tree = good_tree(4);
  // Number of nodes: nval-0 nodes have one child, the rest two.
  std::size_t expect = 0, width_by_nval[8] = {1};
  for (std::size_t level = 0; level <= 4; ++level) {
    std::size_t next[8] = {0};
    for (std::size_t n = 0; n < 7; ++n) {
      expect += width_by_nval[n];
      next[n + 1] += width_by_nval[n];
      if (n >= 1) next[n - 1] += width_by_nval[n];
    }
    std::copy(next, next + 8, width_by_nval);
  }
  EXPECT_EQ(tree.size(), expect);
  for (const auto& g : tree) {
    auto back = parse_good(g.tilde);
    ASSERT_TRUE(back);
    EXPECT_EQ(back->sigma, g.sigma);
    EXPECT_EQ(back->nval, g.nval);
  }
  EXPECT_FALSE(parse_good(Word::binary("1")));
  EXPECT_FALSE(parse_good(Word::binary("000")));
  EXPECT_THROW(GoodNode{}.extend(false), PreconditionError);
}

TEST(Rho, BandsFromEnclosures) {
  Rational r(3, 8);
  // |x - r| = 3/32 lies in [2^-4, 2^-3): band 2.
  EXPECT_EQ(rho_of(MeasureBounds(r + Rational(3, 32)), r).kind, Rho::Kind::Band);
  EXPECT_EQ(rho_of(MeasureBounds(r + Rational(3, 32)), r).band, 2u);
  EXPECT_EQ(rho_of(MeasureBounds(r), r).kind, Rho::Kind::Omega);
  EXPECT_EQ(rho_of(MeasureBounds(r - Rational(1, 64), r + Rational(1, 64)), r).kind, Rho::Kind::Straddle);
  EXPECT_EQ(rho_of(MeasureBounds(Rational(1)), r).kind, Rho::Kind::Outside);
}

TEST(SharpK, DigitSetsHaveTheirMeasures) {
  SharpK k;
  TreeMeasure w = cantor_measure();
  for (std::size_t n = 0; n < 6; ++n) {
    EXPECT_EQ(k.D(n).measure(w), k.r_n(n));
    EXPECT_EQ(k.E(n).measure(w), k.E_measure(n));
    EXPECT_EQ(abs(k.r_n(n) - k.r()), Rational(6) * Rational::pow2(-static_cast<long>(n) - 4));
  }
  EXPECT_THROW(SharpK(Rational(1, 3)), PreconditionError);
  EXPECT_THROW(SharpK(Rational(1)), PreconditionError);
}

TEST(SharpK, GoodNodesSitInTheirBands) {
  SharpK k;
  for (const auto& g : good_tree(5)) {
    SharpPoint p = k.measure(g.tilde, 4);
    ASSERT_EQ(p.rho.kind, Rho::Kind::Band) << g.str();
    EXPECT_EQ(p.rho.band, g.nval);
    EXPECT_LE(abs(p.bounds.center() - k.r_n(g.nval)), Rational::pow2(-static_cast<long>(g.nval) - 4));
  }
  EXPECT_THROW(k.measure(Word::binary("1"), 2), PreconditionError);
}

TEST(SharpK, DeeperEnclosuresNest) {
  SharpK k;
  for (std::size_t n = 0; n < 5; ++n)
    for (std::size_t d = 0; d < 5; ++d) EXPECT_TRUE(k.good_bounds(n, d).contains(k.good_bounds(n, d + 1))) << n << d;
}

TEST(SharpReduction, ImagesFollowGamma) {
  SharpK k;
  BitMatrix a{{0, 1, 0}, {0, 0, 1}, {1, 1, 0}};
  SharpPath p = sharp_reduction(k, a, 2);
  EXPECT_TRUE(p.certified);
  EXPECT_EQ(p.gamma, gamma(a));
  EXPECT_EQ(p.node.nval, gamma(a));
  // Extends the image of the corner.
  BitMatrix c{{0, 1}, {0, 0}};
  EXPECT_TRUE(sharp_reduction(k, c, 2).node.tilde.is_prefix_of(p.node.tilde));
  EXPECT_THROW(sharp_reduction(k, {{0, 1}}, 2), PreconditionError);
}

TEST(SharpReduction, TrajectoryOfZeroClimbs) {
  SharpK k;
  auto rows = sharp_trajectory(k, MatrixCode::all_zero(5), 5);
  for (const auto& r : rows) {
    EXPECT_EQ(r.path.point.rho.band, r.stage);
    EXPECT_TRUE(r.path.certified);
  }
}

TEST(CompactReduction, AllZeroStaysNull) {
  CompactReduction red = compactness_reduction(MatrixCode::all_zero(8), 6);
  EXPECT_TRUE(red.p3);
  EXPECT_TRUE(red.pieces.empty());
  for (const auto& inc : red.increments) EXPECT_TRUE(inc.is_zero());
  for (std::size_t d = 0; d < red.stage_measures.size(); ++d)
    EXPECT_LE(red.stage_measures[d].hi(), Rational::pow2(-static_cast<long>(d)) + Rational::pow2(-static_cast<long>(compact_steps(d)) - 1) * Rational(2));
}

TEST(CompactReduction, PiecesAreDisjointWithinARow) {
  CompactReduction red = compactness_reduction(MatrixCode::row_ones(1, 4), 4);
  EXPECT_FALSE(red.p3);
  ASSERT_TRUE(red.witness_row);
  EXPECT_EQ(*red.witness_row, 1u);
  for (std::size_t i = 0; i < red.pieces.size(); ++i) {
    const auto& p = red.pieces[i];
    EXPECT_TRUE(Word::binary("01").is_prefix_of(p.basis));
    EXPECT_TRUE(p.basis.is_prefix_of(p.home));
    EXPECT_EQ(p.eps, Rational::pow2(-static_cast<long>(p.home.size()) - 1));
    for (std::size_t j = 0; j < i; ++j)
      if (red.pieces[j].row == p.row) EXPECT_FALSE(p.home.comparable(red.pieces[j].home));
  }
  for (std::size_t n = 0; n < red.increments.size(); ++n)
    EXPECT_LE(red.increments[n], Rational::pow2(-static_cast<long>(n) - 2));
}

TEST(CompactReduction, FiniteRowsStabilize) {
  MatrixCode z({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
  CompactReduction red = compactness_reduction(z, 3);
  EXPECT_TRUE(red.p3);
  ASSERT_GE(red.stabilization.size(), 2u);
  EXPECT_EQ(red.stabilization[0].bound, 2u);
  EXPECT_EQ(red.stabilization[0].pieces, 1u);
  EXPECT_EQ(red.stabilization[1].bound, 3u);
}

TEST(CompactReduction, RejectsStagesBeyondTheCap) {
  EXPECT_THROW(compactness_reduction(MatrixCode::all_zero(2), 6, 16), PreconditionError);
}

}  // namespace
}  // namespace dlab
