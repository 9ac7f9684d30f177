#include <benchmark/benchmark.h>

#include "qha/borel.hpp"
#include "qha/io.hpp"
#include "qha/skew.hpp"

using namespace qha;

static void BM_Rref(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Scalar((i * 7 + j * 3) % 11 - 5, 1 + (i + j) % 3);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_Rref)->Arg(16)->Arg(32)->Arg(64);

static void BM_RrefPrime(benchmark::State& state) {
  FieldScope fs(Field::prime(103));
  const int n = static_cast<int>(state.range(0));
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Scalar((i * 7 + j * 3) % 11 - 5);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m).rank);
}
BENCHMARK(BM_RrefPrime)->Arg(32)->Arg(64);

static void BM_BuildAuslander(benchmark::State& state) {
  auto d = example_auslander(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_description(d).a->dim());
}
BENCHMARK(BM_BuildAuslander)->DenseRange(2, 5);

static void BM_ExtModel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = build_description(example_auslander(n)).a;
  auto deltas = standard_modules(a, SimpleOrder::chain(n));
  for (auto _ : state) benchmark::DoNotOptimize(ext_model(deltas, 4, 5, true).transfer.model->dim());
}
BENCHMARK(BM_ExtModel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_Synthesize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  auto a = build_description(example_auslander(n)).a;
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_borel_pair(a, SimpleOrder::chain(n)).r.alg->dim());
}
BENCHMARK(BM_Synthesize)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

static void BM_Conjugate(benchmark::State& state) {
  auto b = build_description(example_auslander(3));
  auto& emb = b.subs[0].emb;
  auto e2 = conjugate_embedding(emb, random_unit(*b.amb, 3));
  for (auto _ : state) benchmark::DoNotOptimize(conjugate_subalgebras(emb, e2).candidates);
}
BENCHMARK(BM_Conjugate)->Unit(benchmark::kMillisecond);

static void BM_Obstruction(benchmark::State& state) {
  auto b = build_description(example_two_source());
  for (auto _ : state)
    benchmark::DoNotOptimize(invariant_borel_obstruction(*b.action_amb, b.subs[0].emb).verdict);
}
BENCHMARK(BM_Obstruction)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
