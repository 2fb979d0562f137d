#include "mlqm/deformed_algebra.hpp"
#include "mlqm/poincare.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_BuildCovariantFamily(benchmark::State& state) {
    const auto params = mlqm::DeformationParams::symbolic();
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(mlqm::build_covariant_operators(params, d));
}
BENCHMARK(BM_BuildCovariantFamily)->DenseRange(1, 3);

void BM_VerifyDeformedAlgebra(benchmark::State& state) {
    const auto fam = mlqm::build_covariant_operators(mlqm::DeformationParams::symbolic(),
                                                     static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mlqm::verify_deformed_algebra(fam));
}
BENCHMARK(BM_VerifyDeformedAlgebra)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_PoincareClosure(benchmark::State& state) {
    const auto fam = mlqm::build_covariant_operators(mlqm::DeformationParams::symbolic(),
                                                     static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(mlqm::verify_poincare_closure(fam));
}
BENCHMARK(BM_PoincareClosure)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_CommutatorXX(benchmark::State& state) {
    const auto fam = mlqm::build_covariant_operators(mlqm::DeformationParams::symbolic(), 3);
    for (auto _ : state) benchmark::DoNotOptimize(fam.X(0).commutator(fam.X(1)));
}
BENCHMARK(BM_CommutatorXX)->Unit(benchmark::kMicrosecond);

void BM_ComposeBoosts(benchmark::State& state) {
    const auto fam = mlqm::build_covariant_operators(mlqm::DeformationParams::symbolic(), 2);
    const auto l01 = mlqm::build_lorentz(fam, 0, 1);
    const auto l02 = mlqm::build_lorentz(fam, 0, 2);
    for (auto _ : state) benchmark::DoNotOptimize(l01.compose(l02));
}
BENCHMARK(BM_ComposeBoosts)->Unit(benchmark::kMicrosecond);

} // namespace
