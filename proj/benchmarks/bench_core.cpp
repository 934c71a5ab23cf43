#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "generators.hpp"

using namespace interdec;

namespace {

Field field_for(int which) { return which ? Field::modular(2) : Field::rational(); }

void BM_Rref(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Field f = field_for(static_cast<int>(state.range(1)));
  gen::Rng rng(1);
  Matrix m(f, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_scalar(f, rng);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->ArgsProduct({{4, 8, 16, 32}, {0, 1}});

void BM_Intersect(benchmark::State& state) {
  const std::size_t d = static_cast<std::size_t>(state.range(0));
  const Field f = Field::rational();
  gen::Rng rng(2);
  const Subspace u = gen::random_subspace(rng, f, d, d);
  const Subspace w = gen::random_subspace(rng, f, d, d);
  for (auto _ : state) benchmark::DoNotOptimize(intersect(u, w));
}
BENCHMARK(BM_Intersect)->Arg(4)->Arg(8)->Arg(16);

// Same arrangement, local condition vs the lower-set pair scan.
Arrangement random_case(std::size_t n) {
  gen::Rng rng(3 + n);
  const Poset p = gen::random_poset(rng, n, 0.3);
  return gen::planted_decomposable(rng, p, Field::rational(), 6);
}

void BM_CheckC(benchmark::State& state) {
  const Arrangement a = random_case(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_condition_C(a));
}
BENCHMARK(BM_CheckC)->DenseRange(3, 8, 1);

void BM_CheckIBruteforce(benchmark::State& state) {
  const Arrangement a = random_case(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_intersection_bruteforce(a));
}
BENCHMARK(BM_CheckIBruteforce)->DenseRange(3, 8, 1)->Unit(benchmark::kMillisecond);

void BM_FactorInteractions(benchmark::State& state) {
  std::vector<std::size_t> cards;
  for (int i = 0; i < state.range(0); ++i) cards.push_back(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(interaction_dimensions(fixtures::factor(cards)));
}
BENCHMARK(BM_FactorInteractions)->Args({2, 2})->Args({2, 4})->Args({3, 2})->Args({3, 3})->Args({4, 2})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
