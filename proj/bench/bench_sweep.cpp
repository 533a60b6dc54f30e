// Serial reference vs OpenMP sweeps.

#include <benchmark/benchmark.h>

#include "vacuum/particles.hpp"
#include "vacuum/sweep.hpp"

namespace {

using namespace vacuum;

void BM_Susceptibility(benchmark::State& state, Execution exec) {
    const auto grid = SweepSpec{1e-2, 1e8, static_cast<std::size_t>(state.range(0)), Scale::log}.grid();
    for (auto _ : state) benchmark::DoNotOptimize(susceptibility_sweep(grid, Spin::half, susceptibility_tolerance, exec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Running(benchmark::State& state, Execution exec) {
    const auto set = builtin_particle_set("standard-model+higgs");
    const auto grid = SweepSpec{1e-2, 1e8, static_cast<std::size_t>(state.range(0)), Scale::log}.grid();
    for (auto _ : state) benchmark::DoNotOptimize(running_sweep(grid, set, susceptibility_tolerance, exec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Dispersion(benchmark::State& state, Execution exec) {
    const auto grid = SweepSpec{1e-2, 1e4, static_cast<std::size_t>(state.range(0)), Scale::log}.grid();
    for (auto _ : state) benchmark::DoNotOptimize(dispersion_sweep(grid, {1e-12, 0.0, 2000000}, exec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Uehling(benchmark::State& state, Execution exec) {
    const auto set = builtin_particle_set("electron");
    const auto grid = SweepSpec{1e-4, 1e1, static_cast<std::size_t>(state.range(0)), Scale::log}.grid();
    for (auto _ : state) benchmark::DoNotOptimize(uehling_sweep(grid, set, {1e-9, 0.0, 50000000}, exec));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Susceptibility, serial, Execution::serial)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Susceptibility, parallel, Execution::parallel)->Arg(256)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Running, serial, Execution::serial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Running, parallel, Execution::parallel)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Dispersion, serial, Execution::serial)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Dispersion, parallel, Execution::parallel)->Arg(64)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(BM_Uehling, serial, Execution::serial)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Uehling, parallel, Execution::parallel)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
