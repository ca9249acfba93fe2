#include <benchmark/benchmark.h>

#include "pasfrac/pasfrac.hpp"

using namespace pasfrac;

namespace {

const PrecisionScope kPrecision(128);

void BM_PhiDiagonal(benchmark::State& state) {
  const Integer q = Integer(1) << static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_diagonal(Prime(2), q - 1));
}
BENCHMARK(BM_PhiDiagonal)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_PhiLinearDp(benchmark::State& state) {
  const Integer q = Integer(1) << static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(phi_linear_dp(Prime(2), 1, 1, q - 1));
}
BENCHMARK(BM_PhiLinearDp)->Arg(16)->Arg(64)->Arg(256)->Arg(1024);

void BM_PhiBruteforce(benchmark::State& state) {
  const Integer q(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi_bruteforce(Prime(2), FormSpec::diagonal(), q));
}
BENCHMARK(BM_PhiBruteforce)->Arg(255)->Arg(1023)->Arg(4095);

void BM_SummatoryTable(benchmark::State& state) {
  const auto count = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(summatory_table(Prime(2), FormSpec::diagonal(), count));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SummatoryTable)->Arg(1 << 10)->Arg(1 << 14);

void BM_SummatoryScaled(benchmark::State& state) {
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(summatory_scaled(Prime(2), FormKind::Diagonal, Integer(17), k));
}
BENCHMARK(BM_SummatoryScaled)->Arg(10)->Arg(100)->Arg(1000);

void BM_AccumulationDiagonal(benchmark::State& state) {
  const Integer u(static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(accumulation_diagonal(Prime(2), u));
}
BENCHMARK(BM_AccumulationDiagonal)->Arg(17)->Arg(100003);

}  // namespace

BENCHMARK_MAIN();
