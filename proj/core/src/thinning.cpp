#include "hawkes/thinning.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "hawkes/errors.hpp"
#include "hawkes/rng.hpp"

namespace hawkes {

namespace {

// Lag beyond which the kernel's remaining mass is below 1e-12 of its total;
// history older than that is dropped from intensity sums. Exact for uniform,
// analytic tail for exponential and pareto.
double truncation_lag(const KernelSpec& k) {
    constexpr double kTailFraction = 1e-12;
    switch (k.family()) {
        case KernelFamily::null_kernel:
            return 0.0;
        case KernelFamily::uniform:
            return k.param1();
        case KernelFamily::exponential:
            return -std::log(kTailFraction) / k.param1();
        case KernelFamily::pareto:
            return k.param1() * (std::pow(kTailFraction, -1.0 / k.param2()) - 1.0);
    }
    return std::numeric_limits<double>::infinity();
}

}  // namespace

EventSequence simulate_thinning(const HawkesModel& model, double a, double b,
                                double burn_in, std::uint64_t seed,
                                const SimulationCaps& caps) {
    if (!(a < b)) throw std::invalid_argument("window must satisfy a < b");
    if (!(burn_in > 0.0)) throw std::invalid_argument("burn_in must be positive");

    Rng rng(seed);
    const std::size_t m = model.types();

    // Per-source lag beyond which no target kernel contributes.
    std::vector<double> source_lag(m, 0.0);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t)
            if (model.kernel(s, t).l1_norm() > 0.0)
                source_lag[s] = std::max(source_lag[s],
                                         truncation_lag(model.kernel(s, t)));

    std::vector<EventSequence::Event> history;  // accepted points, ascending
    std::size_t live_begin = 0;  // first history index still within any lag

    // Intensity of every type at time t (contributions strictly before t; at a
    // just-accepted event time this is the t -> t+ limit since evaluate(0) is
    // the right limit of the kernel).
    auto intensities = [&](double t, std::vector<double>& lam) {
        for (std::size_t k = 0; k < m; ++k) lam[k] = model.mu()[k];
        while (live_begin < history.size() &&
               t - history[live_begin].time >
                   source_lag[static_cast<std::size_t>(history[live_begin].type)])
            ++live_begin;
        for (std::size_t i = live_begin; i < history.size(); ++i) {
            const auto& e = history[i];
            const double lag = t - e.time;
            const auto src = static_cast<std::size_t>(e.type);
            if (lag > source_lag[src]) continue;  // mixed lags inside the live range
            for (std::size_t k = 0; k < m; ++k) {
                const KernelSpec& ker = model.kernel(src, k);
                if (ker.l1_norm() > 0.0) lam[k] += ker.evaluate(lag);
            }
        }
    };

    std::vector<double> lam(m), lam_true(m);
    double s = a - burn_in;
    for (;;) {
        intensities(s, lam);
        double majorant = 0.0;
        for (double v : lam) majorant += v;
        if (majorant > caps.rate_ceiling) {
            std::ostringstream msg;
            msg << "total thinning intensity " << majorant
                << " exceeded the rate ceiling " << caps.rate_ceiling;
            throw RateCapExceeded(majorant, msg.str());
        }
        if (majorant <= 0.0) break;  // no base rate, no live history

        s += rng.exponential(majorant);
        if (s >= b) break;

        intensities(s, lam_true);
        double total = 0.0;
        for (double v : lam_true) total += v;
        // Kernels are nonincreasing, so the frozen majorant dominates.
        assert(total <= majorant * (1.0 + 1e-9));

        // One uniform decides acceptance and type together.
        double u = rng.uniform01() * majorant;
        if (u < total) {
            int type = static_cast<int>(m) - 1;
            for (std::size_t k = 0; k < m; ++k) {
                u -= lam_true[k];
                if (u <= 0.0) {
                    type = static_cast<int>(k);
                    break;
                }
            }
            history.push_back({s, type});
        }
    }

    std::vector<EventSequence::Event> pts;
    for (const auto& e : history)
        if (e.time >= a && e.time < b) pts.push_back(e);
    return EventSequence::from_points(std::move(pts), a, b);
}

}  // namespace hawkes
