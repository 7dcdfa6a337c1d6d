#include <benchmark/benchmark.h>

#include "sgradius/radius_formulas.hpp"
#include "sgradius/sharpness_oracle.hpp"

namespace {

void BM_ClosedForm(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sgr::formula_radius(sgr::ClassId::RL, {}));
    }
}
BENCHMARK(BM_ClosedForm);

void BM_RootRadius(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sgr::formula_radius(sgr::ClassId::PE, {}));
    }
}
BENCHMARK(BM_RootRadius);

void BM_CircleMax(benchmark::State& state) {
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sgr::circle_max_h(sgr::ClassId::G4, {}, 0.2, samples));
    }
}
BENCHMARK(BM_CircleMax)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_Oracle(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(sgr::verify_class(sgr::ClassId::Crescent, {}, 4096));
    }
}
BENCHMARK(BM_Oracle)->Unit(benchmark::kMillisecond);

void BM_FullGrid(benchmark::State& state) {
    const auto grid = sgr::full_parameter_grid();
    const auto threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sgr::verify_all(grid, threads, 4096));
    }
}
BENCHMARK(BM_FullGrid)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
