#include <benchmark/benchmark.h>

#include <random>

#include "densitylab/cantor/cylinder.hpp"
#include "densitylab/cantor/thin.hpp"
#include "densitylab/embedding/allocate.hpp"
#include "densitylab/reductions/sharp.hpp"
#include "densitylab/spongy/spongy.hpp"

namespace {

using namespace dlab;

// Generators of one length, so canonicalization cannot collapse the set.
CylinderSet random_set(std::mt19937_64& rng, int gens, int len) {
  std::vector<Word> out;
  for (int i = 0; i < gens; ++i) {
    Word w;
    for (int j = 0; j < len; ++j) w.push_back(static_cast<int>(rng() & 1));
    out.push_back(w);
  }
  return CylinderSet(out);
}

void BM_CylinderUnite(benchmark::State& state) {
  std::mt19937_64 rng(1);
  CylinderSet a = random_set(rng, static_cast<int>(state.range(0)), 16);
  CylinderSet b = random_set(rng, static_cast<int>(state.range(0)), 16);
  for (auto _ : state) benchmark::DoNotOptimize(a.unite(b));
}
BENCHMARK(BM_CylinderUnite)->Arg(64)->Arg(1024);

void BM_CylinderComplement(benchmark::State& state) {
  std::mt19937_64 rng(2);
  CylinderSet a = random_set(rng, static_cast<int>(state.range(0)), 16);
  for (auto _ : state) benchmark::DoNotOptimize(a.complement());
}
BENCHMARK(BM_CylinderComplement)->Arg(64)->Arg(1024);

void BM_ThinCompactStage(benchmark::State& state) {
  auto k = std::make_shared<ThinCompact>(Word::binary("01"), Rational(1, 16));
  for (auto _ : state) benchmark::DoNotOptimize(k->view(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_ThinCompactStage)->Arg(6)->Arg(10);

void BM_SpongyWindow(benchmark::State& state) {
  TriadicConfig cfg;
  for (auto _ : state)
    benchmark::DoNotOptimize(spongy_window(cfg, Rational(1, 7), Rational(2, 7), static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SpongyWindow)->Arg(12)->Arg(48);

void BM_SharpGoodNodes(benchmark::State& state) {
  auto tree = good_tree(5);
  for (auto _ : state) {
    SharpK k;
    for (const auto& g : tree) benchmark::DoNotOptimize(k.measure(g.tilde, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_SharpGoodNodes)->Arg(2)->Arg(6);

void BM_AllocateAmphorae(benchmark::State& state) {
  std::vector<Rational> b(8, Rational(1)), a;
  for (long i = 0; i < state.range(0); ++i) a.emplace_back(1, state.range(0) * 2);
  for (auto _ : state) benchmark::DoNotOptimize(allocate_amphorae(b, a));
}
BENCHMARK(BM_AllocateAmphorae)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
