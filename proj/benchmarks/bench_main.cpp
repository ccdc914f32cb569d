#include <benchmark/benchmark.h>

#include "twoadic/core_arith.hpp"
#include "twoadic/exp_sum.hpp"
#include "twoadic/order_engine.hpp"
#include "twoadic/sweep.hpp"

namespace {

using namespace twoadic;

void BM_ModPowLargeModulus(benchmark::State& state) {
  const auto n = static_cast<long long>(state.range(0));
  const BigInt e = pow2(static_cast<unsigned long>(n)) - 3;
  for (auto _ : state) benchmark::DoNotOptimize(mod_pow(3, e, n));
}
BENCHMARK(BM_ModPowLargeModulus)->Arg(64)->Arg(512)->Arg(4096);

void BM_OrderFast(benchmark::State& state) {
  const auto n = static_cast<long long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(order_fast(3, n));
}
BENCHMARK(BM_OrderFast)->Arg(12)->Arg(64)->Arg(1024)->Arg(4096);

void BM_OrderNaive(benchmark::State& state) {
  const auto n = static_cast<long long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(order_naive(3, n));
}
BENCHMARK(BM_OrderNaive)->Arg(8)->Arg(12)->Arg(16);

void BM_ResidueOrbitAndCertificate(benchmark::State& state) {
  const auto n = static_cast<long long>(state.range(0));
  for (auto _ : state) {
    auto orbit = residue_orbit(5, 12, n);
    benchmark::DoNotOptimize(is_exact_zero(orbit));
  }
}
BENCHMARK(BM_ResidueOrbitAndCertificate)->Arg(8)->Arg(12)->Arg(16);

void BM_AntipodalShift(benchmark::State& state) {
  const auto n = static_cast<long long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(antipodal_shift_holds(3, 1, n));
}
BENCHMARK(BM_AntipodalShift)->Arg(16)->Arg(24);

void BM_SweepLemma1(benchmark::State& state) {
  SweepSpec spec;
  spec.claim = Claim::lemma1;
  spec.n_range = {1, 14};
  spec.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(spec));
}
BENCHMARK(BM_SweepLemma1)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
