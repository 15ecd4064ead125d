#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hawkes {

struct MeanVar {
    double mean = 0.0;
    double var = 0.0;  // unbiased sample variance
    std::size_t n = 0;
};

MeanVar mean_var(std::span<const double> values);

// Inverse standard normal CDF (Acklam's approximation with one Halley
// refinement through erfc; absolute error well below 1e-12).
double normal_quantile(double p);

// Complementary Kolmogorov distribution Q(lambda) = 2 sum (-1)^{k-1} e^{-2 k^2 lambda^2}.
double kolmogorov_q(double lambda);

// Asymptotic two-sample Kolmogorov-Smirnov p-value with the Stephens
// small-sample correction. With heavily tied (integer count) data the
// continuous reference law makes the p-value conservative, which is the safe
// direction for equivalence checks.
double ks_two_sample_pvalue(std::span<const double> xs, std::span<const double> ys);

}  // namespace hawkes
