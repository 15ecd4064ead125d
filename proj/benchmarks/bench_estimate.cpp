#include <benchmark/benchmark.h>

#include <vector>

#include "hawkes/piecewise_fn.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/verify.hpp"

namespace {

std::vector<double> poisson_counts(std::size_t n, double mean) {
    hawkes::Rng rng(7);
    std::vector<double> out(n);
    for (auto& v : out) v = static_cast<double>(rng.poisson(mean));
    return out;
}

void BM_estimate_mgf_clt(benchmark::State& state) {
    const auto counts = poisson_counts(static_cast<std::size_t>(state.range(0)), 4.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(hawkes::estimate_mgf(counts, 0.05));
}
BENCHMARK(BM_estimate_mgf_clt)->Arg(10000)->Arg(100000);

void BM_estimate_mgf_bootstrap(benchmark::State& state) {
    const auto counts = poisson_counts(static_cast<std::size_t>(state.range(0)), 4.0);
    hawkes::EstimateOptions opts;
    opts.certified_xi_max = 0.05;  // force the bootstrap path
    for (auto _ : state)
        benchmark::DoNotOptimize(hawkes::estimate_mgf(counts, 0.05, opts));
}
BENCHMARK(BM_estimate_mgf_bootstrap)->Arg(10000)->Arg(100000);

void BM_fold_norm(benchmark::State& state) {
    hawkes::Rng rng(11);
    std::vector<double> bp(65);
    double x = 0.0;
    for (auto& b : bp) {
        b = x;
        x += 0.05 + rng.uniform01();
    }
    std::vector<double> vals(64);
    for (auto& v : vals) v = rng.uniform01();
    const hawkes::PiecewiseFn f(bp, vals);
    for (auto _ : state)
        benchmark::DoNotOptimize(hawkes::f_fold_norm(f, 0.7));
}
BENCHMARK(BM_fold_norm);

}  // namespace
