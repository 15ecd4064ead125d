#include <benchmark/benchmark.h>

#include "hawkes/rng.hpp"
#include "hawkes/spectral.hpp"

namespace {

hawkes::InteractionMatrix random_subcritical(std::size_t m, std::uint64_t seed) {
    hawkes::Rng rng(seed);
    hawkes::InteractionMatrix h(m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            h(i, j) = 0.8 * rng.uniform01() / static_cast<double>(m);
    return h;
}

void BM_spectral_radius(benchmark::State& state) {
    const auto h = random_subcritical(static_cast<std::size_t>(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(hawkes::spectral_radius(h));
}
BENCHMARK(BM_spectral_radius)->Arg(2)->Arg(8)->Arg(32);

void BM_ge_certificate(benchmark::State& state) {
    const auto h = random_subcritical(static_cast<std::size_t>(state.range(0)), 2);
    const double r = hawkes::spectral_radius(h) * 1.2 + 1e-3;
    for (auto _ : state)
        benchmark::DoNotOptimize(hawkes::ge_certificate(h, r));
}
BENCHMARK(BM_ge_certificate)->Arg(2)->Arg(8)->Arg(32);

void BM_optimize_xi(benchmark::State& state) {
    const auto h = random_subcritical(8, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(hawkes::optimize_xi(h));
}
BENCHMARK(BM_optimize_xi);

}  // namespace

BENCHMARK_MAIN();
