#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hawkes {

// An iterative bracket failed to tighten below its tolerance within the cap.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The spectral radius of the interaction matrix violates the requirement of
// the requested operation (spr < 1 for simulation, spr <= r for certificates).
struct SubcriticalityViolated : std::runtime_error {
    double spectral_radius;
    SubcriticalityViolated(double spr, const std::string& what)
        : std::runtime_error(what), spectral_radius(spr) {}
};

// No horizon N <= n_cap satisfies |||H^N|||_inf <= r^N.
struct HorizonExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the range where the requested quantity is defined or claimed.
struct OutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

struct InsufficientSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A sampled tree/cluster hit its node cap. `replicate` identifies the window
// replicate when raised from a batched simulation, npos otherwise.
struct NodeCapExceeded : std::runtime_error {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t replicate;
    explicit NodeCapExceeded(const std::string& what, std::size_t rep = npos)
        : std::runtime_error(what), replicate(rep) {}
};

// Total thinning intensity exceeded the configured ceiling.
struct RateCapExceeded : std::runtime_error {
    double rate;
    RateCapExceeded(double r, const std::string& what)
        : std::runtime_error(what), rate(r) {}
};

}  // namespace hawkes
