#include "mlqm/oscillator.hpp"
#include "mlqm/special_functions.hpp"
#include "mlqm/uncertainty.hpp"

#include <benchmark/benchmark.h>

namespace {

const mlqm::OscillatorConfig kCfg = mlqm::make_config(0.2, 0.5);

void BM_Quantize(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mlqm::quantize(kCfg, n, +1));
}
BENCHMARK(BM_Quantize)->Arg(1)->Arg(1000)->Arg(1000000);

void BM_BuildWavefunctions(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mlqm::build_wavefunctions(kCfg, n, +1));
}
BENCHMARK(BM_BuildWavefunctions)->Arg(1)->Arg(20);

void BM_DiracResidual(benchmark::State& state) {
    const auto w = mlqm::build_wavefunctions(kCfg, static_cast<int>(state.range(0)), +1);
    for (auto _ : state) benchmark::DoNotOptimize(mlqm::dirac_residual(w, 200));
    state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_DiracResidual)->Arg(1)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_NormQuadrature(benchmark::State& state) {
    const auto w = mlqm::build_wavefunctions(kCfg, static_cast<int>(state.range(0)), +1);
    for (auto _ : state) benchmark::DoNotOptimize(mlqm::norm_quadrature(w));
}
BENCHMARK(BM_NormQuadrature)->Arg(1)->Arg(20)->Unit(benchmark::kMicrosecond);

void BM_OscillatorMoments(benchmark::State& state) {
    const auto w = mlqm::build_wavefunctions(kCfg, 4, +1);
    for (auto _ : state) benchmark::DoNotOptimize(mlqm::oscillator_moments(w));
}
BENCHMARK(BM_OscillatorMoments)->Unit(benchmark::kMicrosecond);

void BM_LogGegenbauer(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(mlqm::log_gegenbauer(n, 10.0, 0.6));
}
BENCHMARK(BM_LogGegenbauer)->Arg(20)->Arg(2000);

} // namespace
