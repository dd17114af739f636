#include "subcur/currents.hpp"
#include "subcur/fiber.hpp"
#include "subcur/stallings.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace subcur;

std::vector<Word> random_generators(Rng& rng, Alphabet alphabet, int count, int length) {
  std::vector<Word> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_word(rng, alphabet, length));
  return gens;
}

void BM_Fold(benchmark::State& state) {
  Rng rng(1);
  const auto gens = random_generators(rng, Alphabet(3), 4, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(from_generators(Alphabet(3), gens));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Fold)->RangeMultiplier(4)->Range(8, 2048)->Complexity();

void BM_FiberProduct(benchmark::State& state) {
  Rng rng(2);
  const int len = static_cast<int>(state.range(0));
  const auto h = from_generators(Alphabet(2), random_generators(rng, Alphabet(2), 3, len));
  const auto k = from_generators(Alphabet(2), random_generators(rng, Alphabet(2), 3, len));
  for (auto _ : state) benchmark::DoNotOptimize(fiber_product(h.graph(), k.graph()));
}
BENCHMARK(BM_FiberProduct)->RangeMultiplier(2)->Range(4, 64);

void BM_NThreeRoutes(benchmark::State& state) {
  Rng rng(3);
  const auto h = random_subgroup(rng, Alphabet(2), 3, 6);
  const auto k = random_subgroup(rng, Alphabet(2), 3, 6);
  const auto mu = RationalCurrent::counting(h);
  const auto nu = RationalCurrent::counting(k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(intersection_number_euler(core(h), core(k)));
    benchmark::DoNotOptimize(intersection_number_cosets(h, k));
    benchmark::DoNotOptimize(intersection_functional_N(mu, nu));
  }
}
BENCHMARK(BM_NThreeRoutes);

void BM_EnumerateRoundGraphs(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_round_graphs(r, Alphabet(2)));
}
BENCHMARK(BM_EnumerateRoundGraphs)->Arg(1)->Arg(2);

void BM_Commensurator(benchmark::State& state) {
  Rng rng(4);
  const CoreGraph base = core(random_subgroup(rng, Alphabet(2), 3, 6));
  const auto cover = random_finite_index_cover(base, static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(commensurator(cover));
}
BENCHMARK(BM_Commensurator)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
