#include <benchmark/benchmark.h>

#include "painleve/exactalg.hpp"

using namespace painleve;

static void BM_RationalSum(benchmark::State& st) {
  RatExpr a = rx("(x^2*y + a1*t)/(x - 1)");
  RatExpr b = rx("(y^2 - a0)/(x*(x - t))");
  for (auto _ : st) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_RationalSum);

static void BM_RationalProductCancel(benchmark::State& st) {
  RatExpr a = rx("(x^2 - y^2)/(x + t)");
  RatExpr b = rx("(x + t)^2/(x - y)");
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_RationalProductCancel);

static void BM_PolyPower(benchmark::State& st) {
  RatExpr p = rx("x + y + z + a0*t + 1");
  for (auto _ : st) benchmark::DoNotOptimize(p.pow(int(st.range(0))));
}
BENCHMARK(BM_PolyPower)->Arg(4)->Arg(8);

static void BM_ParseInfix(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(rx("x^2*y^2*(x-1)^2 + 2*a1*x*y*(x-1) + y*t/(x-t)"));
}
BENCHMARK(BM_ParseInfix);
