// Reference kernels against their fast counterparts, and the serial replica
// loop against the OpenMP one.

#include <benchmark/benchmark.h>

#include "gwheaps/estimator.hpp"
#include "gwheaps/hammersley.hpp"
#include "gwheaps/heap_sorter.hpp"
#include "gwheaps/parallel.hpp"
#include "gwheaps/poisson_field.hpp"

using namespace gwheaps;

namespace {

const auto kBinary = OffspringDistribution::dirac(2);

void BM_SortStreaming(benchmark::State& state) {
    const auto seq = generate_sequence(kBinary, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(run(seq).trace.r_values.back());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SortStreaming)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

void BM_SortOffline(benchmark::State& state) {
    const auto seq = generate_sequence(kBinary, static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(count_trees_all(seq).back());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SortOffline)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond);

void BM_SimulateReference(benchmark::State& state) {
    const double side = static_cast<double>(state.range(0));
    const auto field = sample_field(0.0, side, side, kBinary, 1);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_reference(field).h_lines.size());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(field.size()));
}
BENCHMARK(BM_SimulateReference)->Arg(30)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
    const double side = static_cast<double>(state.range(0));
    const auto field = sample_field(0.0, side, side, kBinary, 1);
    for (auto _ : state) benchmark::DoNotOptimize(simulate(field).h_lines.size());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(field.size()));
}
BENCHMARK(BM_Simulate)->Arg(30)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

// range(0) = jobs; 1 is the serial reference loop, 0 the OpenMP default.
void BM_ReplicaLoop(benchmark::State& state) {
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state) {
        const auto e = estimate_c_discrete(kBinary, 100000, 16, 1, jobs);
        benchmark::DoNotOptimize(e.slope.point);
    }
    state.counters["threads"] = jobs == 0 ? default_jobs() : jobs;
}
BENCHMARK(BM_ReplicaLoop)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
