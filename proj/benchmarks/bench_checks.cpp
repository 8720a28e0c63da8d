#include <benchmark/benchmark.h>

#include "painleve/catalog/system.hpp"
#include "painleve/derive/derive.hpp"
#include "painleve/maps/library.hpp"
#include "painleve/verify/checks.hpp"
#include "painleve/verify/limits.hpp"
#include "painleve/verify/reduction.hpp"

using namespace painleve;

static void BM_BacklundB5(benchmark::State& st) {
  const auto& sys = get_system(SystemId::B5);
  for (auto _ : st)
    for (const auto& g : generators(SystemId::B5)) benchmark::DoNotOptimize(verify_backlund(sys, g));
}
BENCHMARK(BM_BacklundB5)->Unit(benchmark::kMillisecond);

static void BM_RelationsB3(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(verify_relations(presentation(SystemId::B3), generators(SystemId::B3), "B3"));
}
BENCHMARK(BM_RelationsB3)->Unit(benchmark::kMillisecond);

static void BM_HolomorphyB5(benchmark::State& st) {
  const auto& sys = get_system(SystemId::B5);
  for (auto _ : st)
    for (const auto& c : charts(SystemId::B5)) benchmark::DoNotOptimize(verify_holomorphy(sys, c));
}
BENCHMARK(BM_HolomorphyB5)->Unit(benchmark::kMillisecond);

static void BM_DeriveB3(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(derive_system(SystemId::B3));
}
BENCHMARK(BM_DeriveB3)->Unit(benchmark::kMillisecond);

static void BM_DeriveB5(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(derive_system(SystemId::B5));
}
BENCHMARK(BM_DeriveB5)->Unit(benchmark::kMillisecond)->Iterations(2);

static void BM_Degeneration(benchmark::State& st) {
  const auto& d = degeneration("D4toB3");
  for (auto _ : st) benchmark::DoNotOptimize(verify_degeneration(d, int(st.range(0)), int(st.range(0)) + 2));
}
BENCHMARK(BM_Degeneration)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ScalarReductions(benchmark::State& st) {
  for (auto _ : st)
    for (const auto& r : scalar_reductions()) benchmark::DoNotOptimize(verify_scalar_reduction(r));
}
BENCHMARK(BM_ScalarReductions)->Unit(benchmark::kMillisecond);
