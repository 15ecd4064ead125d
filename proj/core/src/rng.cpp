#include "hawkes/rng.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hawkes {

std::uint64_t Rng::poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean))
        throw std::invalid_argument("Poisson mean must be finite and nonnegative");
    if (mean == 0.0) return 0;
    if (mean < PTRD_THRESHOLD) return poisson_inversion(mean);
    return poisson_ptrd(mean);
}

std::uint64_t Rng::poisson_inversion(double mean) {
    const double u = uniform01();
    double p = std::exp(-mean);
    double cum = p;
    std::uint64_t k = 0;
    while (u > cum) {
        ++k;
        p *= mean / static_cast<double>(k);
        cum += p;
        if (p < std::numeric_limits<double>::min() && u > cum) {
            // u fell in the vanishing upper tail; k already covers it.
            break;
        }
    }
    return k;
}

// W. Hormann, "The transformed rejection method for generating Poisson random
// variables" (1993), algorithm PTRD. Exact for mean >= 10.
std::uint64_t Rng::poisson_ptrd(double mean) {
    const double smu = std::sqrt(mean);
    const double b = 0.931 + 2.53 * smu;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);

    for (;;) {
        double u = uniform01() - 0.5;
        double v = uniform01();
        double us = 0.5 - std::abs(u);
        double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            kf * std::log(mean) - mean - std::lgamma(kf + 1.0))
            return static_cast<std::uint64_t>(kf);
    }
}

}  // namespace hawkes
