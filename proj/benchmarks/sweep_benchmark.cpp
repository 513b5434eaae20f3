#include <benchmark/benchmark.h>

#include <sstream>

#include "coex/bessel.hpp"
#include "coex/csv.hpp"
#include "coex/geometry.hpp"
#include "coex/sweep.hpp"

namespace {

void BM_BesselJ1(benchmark::State& state) {
    double x = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(coex::bessel_j1(x));
        x = x > 50.0 ? 0.0 : x + 0.37;
    }
}
BENCHMARK(BM_BesselJ1);

void BM_CoexGeometry(benchmark::State& state) {
    const coex::EarthModel earth;
    const auto beam = coex::make_beam_geometry(900.0, earth);
    const auto alpha = coex::Angle::from_degrees(45.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(coex::build_coex_geometry(beam, 100.0, alpha, earth));
    }
}
BENCHMARK(BM_CoexGeometry);

void BM_EvaluatePoint(benchmark::State& state) {
    const coex::ScenarioConfig cfg;
    for (auto _ : state) {
        benchmark::DoNotOptimize(coex::evaluate_point(cfg, 45.0, 900.0));
    }
}
BENCHMARK(BM_EvaluatePoint);

void BM_DefaultSweep(benchmark::State& state) {
    const coex::ScenarioConfig cfg;
    for (auto _ : state) {
        std::ostringstream out;
        coex::write_sweep_csv(out, coex::run_sweep(cfg, static_cast<unsigned>(state.range(0))));
        benchmark::DoNotOptimize(out.str());
    }
}
BENCHMARK(BM_DefaultSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
