#include <benchmark/benchmark.h>

#include "artifact/distribution.hpp"
#include "artifact/jing.hpp"

using namespace artifact;

namespace {

// Serre relation of A2 at N=2: the heaviest single catalog entry.
void run_sweep(benchmark::State& st, bool parallel) {
  CartanData cd = cartan("A2");
  PointSet P(2, {0, 1, 2, 3});
  UqlgRelation rel{UqlgId::Serre, 1, 2, -1};
  for (auto _ : st) {
    VerifyResult r = parallel ? verify_relation(rel, cd, P, 2) : verify_relation_serial(rel, cd, P, 2);
    benchmark::DoNotOptimize(r.coefficients);
  }
}

void BM_SerreVerify(benchmark::State& st) { run_sweep(st, true); }
void BM_SerreVerifySerial(benchmark::State& st) { run_sweep(st, false); }

void BM_JingG2(benchmark::State& st) {
  CartanData cd = cartan("G2");
  for (auto _ : st) benchmark::DoNotOptimize(jing_identity(cd, 1, 2).is_zero());
}
void BM_JingG2Serial(benchmark::State& st) {
  CartanData cd = cartan("G2");
  for (auto _ : st) benchmark::DoNotOptimize(jing_identity_serial(cd, 1, 2).is_zero());
}

void BM_DetX(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(det_X(static_cast<int>(st.range(0)), static_cast<int>(st.range(1))).equal());
}
void BM_DetXSerial(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(det_X_serial(static_cast<int>(st.range(0)), static_cast<int>(st.range(1))).equal());
}

}  // namespace

BENCHMARK(BM_SerreVerify)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SerreVerifySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JingG2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JingG2Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetX)->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetXSerial)->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
