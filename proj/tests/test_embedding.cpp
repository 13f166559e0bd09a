#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "densitylab/core/errors.hpp"
#include "densitylab/embedding/allocate.hpp"
#include "densitylab/embedding/embed.hpp"

namespace dlab {
namespace {

Rational sum(const std::vector<Rational>& v) { return std::accumulate(v.begin(), v.end(), Rational(0)); }

std::vector<Rational> random_weights(std::mt19937_64& rng, std::size_t n, long den) {
  std::uniform_int_distribution<long> num(1, den);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back(num(rng), den);
  return out;
}

TEST(Amphorae, PourIntoBarrelsWithoutOverflow) {
  std::mt19937_64 rng(3);
  int tried = 0;
  for (int it = 0; it < 300; ++it) {
    auto b = random_weights(rng, 1 + rng() % 5, 8);
    auto a = random_weights(rng, 1 + rng() % 8, 64);
    Rational slack = sum(b) - sum(a);
    if (slack.sign() <= 0) continue;
    Rational amax = *std::max_element(a.begin(), a.end());
    if (amax > slack / Rational(static_cast<long>(b.size()))) continue;
    ++tried;
    auto alloc = allocate_amphorae(b, a);
    ASSERT_EQ(alloc.size(), b.size());
    std::vector<int> seen(a.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k) {
      Rational load(0);
      for (std::size_t i : alloc[k]) {
        ++seen[i];
        load += a[i];
      }
      EXPECT_LT(load, b[k]);
    }
    for (int s : seen) EXPECT_EQ(s, 1);
  }
  EXPECT_GT(tried, 20);
}

TEST(Amphorae, RejectsOversizedInput) {
  EXPECT_THROW(allocate_amphorae({Rational(1)}, {Rational(1)}), PreconditionError);
  // Strict capacity: an amphora equal to its barrel is left over.
  EXPECT_FALSE(greedy_amphorae({Rational(1, 2)}, {Rational(1, 2)}).has_value());
  EXPECT_TRUE(greedy_amphorae({Rational(1, 2)}, {Rational(1, 4), Rational(1, 8)}).has_value());
}

TEST(Barrels, BlocksAreConsecutiveAndSufficient) {
  std::mt19937_64 rng(9);
  int tried = 0;
  for (int it = 0; it < 300; ++it) {
    auto A = random_weights(rng, 1 + rng() % 4, 4);
    auto B = random_weights(rng, 1 + rng() % 12, 16);
    Rational slack = sum(B) - sum(A);
    if (slack.sign() <= 0) continue;
    if (A.size() >= 2 &&
        *std::max_element(B.begin(), B.end()) > slack / Rational(static_cast<long>(A.size()) - 1))
      continue;
    ++tried;
    auto blocks = allocate_barrels(A, B);
    ASSERT_EQ(blocks.size(), A.size());
    std::size_t next = 0;
    for (std::size_t k = 0; k < A.size(); ++k) {
      EXPECT_EQ(blocks[k].first, next);
      next = blocks[k].second;
      Rational got(0);
      for (std::size_t j = blocks[k].first; j < blocks[k].second; ++j) got += B[j];
      EXPECT_LT(A[k], got);
      // Least sufficient: dropping the last barrel would not do (except for the final block).
      if (k + 1 < A.size()) EXPECT_GE(A[k], got - B[blocks[k].second - 1]);
    }
    EXPECT_EQ(next, B.size());
  }
  EXPECT_GT(tried, 20);
}

TEST(Embedding, ThreeStagesOnRandomTrees) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    RandomTree rt = random_target_tree(seed);
    TreeMeasure u = cantor_measure();
    StagePlan plan = embed_init(u, rt.w);
    embed_stage(u, rt.tree, rt.w, plan);
    embed_stage(u, rt.tree, rt.w, plan);
    ASSERT_EQ(plan.stages(), 3u);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_TRUE(check_invariant(plan, u, rt.w, k).ok) << seed << " " << k;
    EXPECT_TRUE(check_monotone(plan));
    for (const Word& s : binary_level(plan.L[1])) {
      Sandwich sw = embed_verify(plan, u, rt.w, s, 1);
      EXPECT_TRUE(sw.holds);
      EXPECT_LE(sw.nu, sw.mass);
      EXPECT_LE(sw.mass, sw.upper);
    }
  }
}

TEST(Embedding, StageMapsPartitionTheSource) {
  RandomTree rt = random_target_tree(42);
  TreeMeasure u = cantor_measure();
  StagePlan plan = embed_init(u, rt.w);
  embed_stage(u, rt.tree, rt.w, plan);
  // Fibers of stage 1 partition the source level, and every image is a tree node.
  std::size_t total = 0;
  for (const auto& [t, fiber] : plan.fibers(1)) {
    EXPECT_TRUE(rt.tree.member(t));
    EXPECT_EQ(t.size(), plan.M[1]);
    total += fiber.size();
  }
  EXPECT_EQ(total, std::size_t{1} << plan.L[1]);
}

TEST(Embedding, RejectsHeavierSource) {
  TreeMeasure heavy(Alphabet::Binary, [](const Word& s) { return Rational(4) * Rational::pow2(-static_cast<long>(s.size())); });
  EXPECT_THROW(embed_init(heavy, cantor_measure()), PreconditionError);
}

}  // namespace
}  // namespace dlab
