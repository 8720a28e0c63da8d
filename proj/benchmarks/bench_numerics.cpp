#include <benchmark/benchmark.h>

#include "painleve/maps/library.hpp"
#include "painleve/numerics/flow.hpp"

using namespace painleve;

static void BM_IntegrateB5(benchmark::State& st) {
  FlowConfig cfg = random_config(SystemId::B5, 3, 2.0, 2.5);
  cfg.integrator.rtol = cfg.integrator.atol = 1e-10;
  for (auto _ : st) benchmark::DoNotOptimize(integrate(cfg));
}
BENCHMARK(BM_IntegrateB5)->Unit(benchmark::kMicrosecond);

static void BM_FlowCommutationB3(benchmark::State& st) {
  FlowConfig cfg = random_config(SystemId::B3, 3, 2.0, 2.5);
  cfg.integrator.rtol = cfg.integrator.atol = 1e-10;
  const auto& g = generator(SystemId::B3, "s2");
  for (auto _ : st) benchmark::DoNotOptimize(flow_commutation(g, cfg));
}
BENCHMARK(BM_FlowCommutationB3)->Unit(benchmark::kMicrosecond);

static void BM_ObservedOrder(benchmark::State& st) {
  FlowConfig cfg = random_config(SystemId::A1, 42, 2.0, 2.5);
  for (auto _ : st) benchmark::DoNotOptimize(observed_order(cfg, 2));
}
BENCHMARK(BM_ObservedOrder)->Unit(benchmark::kMillisecond);
