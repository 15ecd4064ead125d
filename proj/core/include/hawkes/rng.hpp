#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>

namespace hawkes {

// SplitMix64 output function.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Sub-seed scheme used everywhere replicates run in parallel: replicate i of a
// batch seeded with `master` uses the i-th output of the SplitMix64 stream
// started at `master`. O(1), collision-free across indices, and independent of
// worker count, so aggregation in index order reproduces single-threaded runs.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + index * 0x9e3779b97f4a7c15ull);
}

// Seedable generator with the exact samplers the simulators rely on.
// uniform01() returns (k + 0.5) * 2^-53, strictly inside (0,1), so inverse-CDF
// draws never land on a support endpoint.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t raw() { return engine_(); }

    double uniform01() {
        return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    }

    // Exp(rate); rate == 0 yields +inf (no arrival).
    double exponential(double rate) {
        if (rate <= 0.0) return std::numeric_limits<double>::infinity();
        return -std::log(uniform01()) / rate;
    }

    // Exact Poisson(mean): sequential inversion below PTRD_THRESHOLD,
    // Hormann's transformed-rejection (PTRD) above it.
    std::uint64_t poisson(double mean);

  private:
    static constexpr double PTRD_THRESHOLD = 10.0;
    std::uint64_t poisson_inversion(double mean);
    std::uint64_t poisson_ptrd(double mean);
    std::mt19937_64 engine_;
};

}  // namespace hawkes
