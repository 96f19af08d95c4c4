#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "ivhf/laws.hpp"

namespace {

using namespace ivhf;

std::vector<UnitInterval> random_intervals(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<UnitInterval> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(UnitInterval::canonical_pair(unit(rng), unit(rng)));
  return out;
}

SoftSet random_soft_set(std::size_t parameters, std::size_t objects, std::size_t element_size, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> p, u;
  for (std::size_t i = 0; i < parameters; ++i) p.push_back("e" + std::to_string(i + 1));
  for (std::size_t i = 0; i < objects; ++i) u.push_back("h" + std::to_string(i + 1));
  std::vector<Ivhfe> cells;
  for (std::size_t i = 0; i < parameters * objects; ++i) {
    const auto raw = random_intervals(element_size, rng);
    cells.push_back(Ivhfe::canonical(raw));
  }
  return SoftSet::make(std::move(u), std::move(p), std::move(cells));
}

void BM_RankCompare(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto xs = random_intervals(1024, rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rank_compare(xs[i & 1023], xs[(i * 7 + 3) & 1023]));
    ++i;
  }
}
BENCHMARK(BM_RankCompare);

void BM_Canonicalize(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto raw = random_intervals(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(raw));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Canonicalize)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_SoftUnion(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SoftSet f = random_soft_set(8, n, 4, 3);
  const SoftSet g = random_soft_set(8, n, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(soft_union(f, g));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(8 * n));
}
BENCHMARK(BM_SoftUnion)->RangeMultiplier(8)->Range(8, 4096);

void BM_PairwiseUnion(benchmark::State& state) {
  std::mt19937_64 rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  const Ivhfe a = Ivhfe::canonical(random_intervals(n, rng));
  const Ivhfe b = Ivhfe::canonical(random_intervals(n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(element_union(a, b, CombineMode::pairwise));
}
BENCHMARK(BM_PairwiseUnion)->RangeMultiplier(4)->Range(2, 64);

void BM_CheckElementLaw(benchmark::State& state) {
  CheckConfig config;
  config.random_trials = 1000;
  const Law& law = find_law("P2.12.i");
  for (auto _ : state) benchmark::DoNotOptimize(check_law(law, config));
}
BENCHMARK(BM_CheckElementLaw)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
