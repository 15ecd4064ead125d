#include <benchmark/benchmark.h>

#include "hawkes/cluster.hpp"
#include "hawkes/gw_tree.hpp"
#include "hawkes/thinning.hpp"

namespace {

const hawkes::InteractionMatrix kTwoType{{0.3, 0.2}, {0.1, 0.4}};

hawkes::HawkesModel two_type_model() {
    return hawkes::HawkesModel::exponential_kernels({1.0, 1.0}, kTwoType, 1.0);
}

void BM_sample_gw_tree(benchmark::State& state) {
    hawkes::Rng rng(1);
    for (auto _ : state)
        benchmark::DoNotOptimize(hawkes::sample_gw_tree(kTwoType, 0, rng));
}
BENCHMARK(BM_sample_gw_tree);

void BM_sample_cluster(benchmark::State& state) {
    const auto model = two_type_model();
    hawkes::Rng rng(2);
    for (auto _ : state)
        benchmark::DoNotOptimize(hawkes::sample_cluster(model, 0, 0.0, rng));
}
BENCHMARK(BM_sample_cluster);

void BM_simulate_window_cluster(benchmark::State& state) {
    const auto model = two_type_model();
    const double burn_in = static_cast<double>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            hawkes::simulate_window(model, 0.0, 1.0, burn_in, seed++));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_simulate_window_cluster)->Arg(8)->Arg(32);

void BM_simulate_window_thinning(benchmark::State& state) {
    const auto model = two_type_model();
    const double burn_in = static_cast<double>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            hawkes::simulate_thinning(model, 0.0, 1.0, burn_in, seed++));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_simulate_window_thinning)->Arg(8)->Arg(32);

}  // namespace
