#include <benchmark/benchmark.h>

#include "ethr/chain.hpp"
#include "ethr/correctability.hpp"
#include "ethr/montecarlo.hpp"
#include "ethr/oracle.hpp"
#include "ethr/threshold.hpp"

namespace ethr {
namespace {

void BM_CorrectabilityKL(benchmark::State& state) {
  const auto code = steane();
  for (auto _ : state) {
    int n = 0;
    for (std::uint64_t m = 0; m < 128; ++m) n += is_correctable(code, ErasurePattern::z_marks(7, m));
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CorrectabilityKL);

void BM_CorrectabilityRank(benchmark::State& state) {
  const auto code = steane();
  for (auto _ : state) {
    int n = 0;
    for (std::uint64_t m = 0; m < 128; ++m) n += is_correctable_rank(code, ErasurePattern::z_marks(7, m));
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_CorrectabilityRank);

void BM_RecursionIdeal(benchmark::State& state) {
  const auto chain = build_ideal_chain();
  for (auto _ : state) benchmark::DoNotOptimize(recursion_polynomial(chain, state.range(0)));
}
BENCHMARK(BM_RecursionIdeal)->Arg(6)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_RecursionLossy(benchmark::State& state) {
  const auto chain = build_lossy_chain(DeltaSpec::equal_eps());
  for (auto _ : state) benchmark::DoNotOptimize(recursion_polynomial(chain, 20));
}
BENCHMARK(BM_RecursionLossy)->Unit(benchmark::kMillisecond);

void BM_OracleRow(benchmark::State& state) {
  const Procedure proc(steane(), Model::Lossy);
  for (auto _ : state) benchmark::DoNotOptimize(derive_transitions_by_bruteforce(proc, "[1,0]"));
}
BENCHMARK(BM_OracleRow)->Unit(benchmark::kMillisecond);

void BM_RunBlock(benchmark::State& state) {
  const Procedure proc(steane(), Model::Lossy);
  RandomSource src(7, 0.02, 0.02);
  for (auto _ : state) benchmark::DoNotOptimize(run_block(proc, 20, src));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RunBlock);

void BM_ThresholdSolve(benchmark::State& state) {
  const auto poly = recursion_polynomial(build_lossy_chain(DeltaSpec::zero()), 20);
  ThresholdOptions opt;
  opt.tolerance = 1e-7;
  for (auto _ : state) benchmark::DoNotOptimize(solve_threshold(poly, Criterion::HalfBreakEven, opt));
}
BENCHMARK(BM_ThresholdSolve)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace ethr

BENCHMARK_MAIN();
