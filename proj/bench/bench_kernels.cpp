/*
   Copyright 2026 The freefall Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// Serial reference kernels against their OpenMP counterparts. Thread count is
// the benchmark argument for the parallel variants; 0 means the runtime default.

#include <benchmark/benchmark.h>

#include "freefall/feasibility.hpp"
#include "freefall/parallel.hpp"
#include "freefall/particle.hpp"
#include "freefall/simulator.hpp"
#include "freefall/sweep.hpp"

using namespace freefall;

namespace {

constexpr double kThirtyDays = 30.0 * 86400.0;

struct PowerCase {
    TestParticle particle = make_particle(200e-9, 2000);
    InitialState state = make_initial_state(particle, 1e5);
    MissionProfile mission{kThirtyDays, 100.0, 100e-9};
    double lambda = lambda_min(state, mission);
};

SweepSpec sweep_case()
{
    SweepSpec spec;
    spec.radii = log_spaced(50e-9, 2e-6, 200);
    spec.densities = {2000.0, 3500.0, 5000.0};
    return spec;
}

void BM_PowerReference(benchmark::State& st)
{
    const PowerCase c;
    for (auto _ : st)
        benchmark::DoNotOptimize(
            reference::detection_power(c.particle, c.state, c.mission, c.lambda, 1.0, st.range(0), 3));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_PowerParallel(benchmark::State& st)
{
    const PowerCase c;
    const int threads = static_cast<int>(st.range(1));
    for (auto _ : st)
        benchmark::DoNotOptimize(
            detection_power(c.particle, c.state, c.mission, c.lambda, 1.0, st.range(0), 3, threads));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_SweepTdReference(benchmark::State& st)
{
    const auto spec = sweep_case();
    for (auto _ : st)
        benchmark::DoNotOptimize(reference::sweep_decoherence_time(spec));
}

void BM_SweepTdParallel(benchmark::State& st)
{
    const auto spec = sweep_case();
    for (auto _ : st)
        benchmark::DoNotOptimize(sweep_decoherence_time(spec, static_cast<int>(st.range(0))));
}

void BM_SweepRatioReference(benchmark::State& st)
{
    const auto spec = sweep_case();
    for (auto _ : st)
        benchmark::DoNotOptimize(reference::sweep_ratios(spec));
}

void BM_SweepRatioParallel(benchmark::State& st)
{
    const auto spec = sweep_case();
    for (auto _ : st)
        benchmark::DoNotOptimize(sweep_ratios(spec, static_cast<int>(st.range(0))));
}

void thread_counts(benchmark::internal::Benchmark* b)
{
    const int hi = parallel::max_threads();
    for (int t = 1; t <= hi; t *= 2)
        b->Arg(t);
    if ((hi & (hi - 1)) != 0)
        b->Arg(hi);
}

}  // namespace

BENCHMARK(BM_PowerReference)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PowerParallel)
    ->Apply([](benchmark::internal::Benchmark* b) {
        const int hi = parallel::max_threads();
        for (int t = 1; t <= hi; t *= 2)
            b->Args({32, t});
    })
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_SweepTdReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepTdParallel)->Apply(thread_counts)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepRatioReference)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SweepRatioParallel)->Apply(thread_counts)->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
