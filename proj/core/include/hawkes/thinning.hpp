#pragma once

#include <cstdint>

#include "hawkes/cluster.hpp"
#include "hawkes/event_sequence.hpp"
#include "hawkes/hawkes_model.hpp"

namespace hawkes {

// Ogata-style thinning oracle, driven directly by the intensity
//   lambda_m(t) = mu_m + sum_{m'} sum_{s in N^{m'}, s < t} h^m_{m'}(t - s).
// All shipped kernels are nonincreasing on (0, inf), so the total intensity
// evaluated just after the latest event majorizes the process until the next
// one; that piecewise-constant majorant is recomputed at every candidate.
// Simulates on [a - burn_in, b) from an empty history and returns the points
// in [a, b), the same law the cluster engine samples, which makes the two
// engines directly comparable. Throws RateCapExceeded if the total intensity
// passes caps.rate_ceiling (near-critical explosion within the window).
EventSequence simulate_thinning(const HawkesModel& model, double a, double b,
                                double burn_in, std::uint64_t seed,
                                const SimulationCaps& caps = {});

}  // namespace hawkes
