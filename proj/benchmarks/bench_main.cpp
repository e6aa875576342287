#include <benchmark/benchmark.h>

#include "mcgen/catalog.hpp"
#include "mcgen/finite_quotients.hpp"
#include "mcgen/symplectic.hpp"

using namespace mcgen;

static void BM_CircularModel(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(circular_model(g));
}
BENCHMARK(BM_CircularModel)->DenseRange(3, 6);

static void BM_EvaluateQPower(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const GenusSetup s = build_setup(g);
  const Word w = power(word_Q(g), 2 * g + 2);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(w, s.table));
}
BENCHMARK(BM_EvaluateQPower)->DenseRange(3, 6);

static void BM_IdentitySuite(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const GenusSetup s = build_setup(g);
  const auto ids = identity_suite(g, Suite::all, true);
  for (auto _ : state)
    for (const auto& id : ids) benchmark::DoNotOptimize(verify_identity(id, s.table));
}
BENCHMARK(BM_IdentitySuite)->DenseRange(3, 5);

static void BM_MatrixOrder(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const SympMatrix m = evaluate(word_S(g), build_setup(g).table);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_order(m, default_order_cap(g)));
}
BENCHMARK(BM_MatrixOrder)->DenseRange(3, 6);

static void BM_Generation(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const long p = state.range(1);
  const GenusSetup s = build_setup(g);
  const GeneratingSet set = six_involution_generators(g);
  for (auto _ : state) benchmark::DoNotOptimize(generation_verdict(set, s.table, p));
}
BENCHMARK(BM_Generation)->Args({3, 2})->Args({3, 3})->Args({4, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
