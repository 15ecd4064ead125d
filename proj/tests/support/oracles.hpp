#pragma once

// Test-side oracles, kept independent of the implementation paths they check:
// brute-force series, quadrature, and closed-form references.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "hawkes/interaction_matrix.hpp"

namespace oracles {

// Dense matrix power H^n by repeated multiplication.
inline hawkes::InteractionMatrix matrix_power(const hawkes::InteractionMatrix& h, int n) {
    hawkes::InteractionMatrix out = h;
    for (int i = 1; i < n; ++i) out = out.multiply(h);
    return out;
}

// e_root^T (I - H)^{-1} 1 by Neumann series: expected total progeny of a tree
// rooted at `root`.
inline double neumann_mean_progeny(const hawkes::InteractionMatrix& h, int root) {
    std::vector<double> acc(h.size(), 1.0);
    std::vector<double> v(h.size(), 1.0);
    for (int n = 0; n < 200000; ++n) {
        v = h.apply(v);
        double vmax = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            acc[i] += v[i];
            vmax = std::max(vmax, v[i]);
        }
        if (vmax < 1e-15) break;
    }
    return acc[static_cast<std::size_t>(root)];
}

// L * sum_m mu_m e_m^T (I - H)^{-1} 1: first-moment (Campbell) oracle for the
// expected stationary count in a window of length L.
inline double campbell_expected_count(const hawkes::InteractionMatrix& h,
                                      const std::vector<double>& mu, double length) {
    double rate = 0.0;
    for (std::size_t m = 0; m < mu.size(); ++m)
        rate += mu[m] * neumann_mean_progeny(h, static_cast<int>(m));
    return length * rate;
}

// Homogeneous Poisson MGF: E exp(t N) with N ~ Poisson(mean).
inline double poisson_mgf(double mean, double t) {
    return std::exp(mean * std::expm1(t));
}

// MGF of the Borel total-progeny law via direct series summation.
template <class Pmf>
double borel_series_mgf(double alpha, double t, Pmf&& pmf, std::uint64_t max_terms = 1000000) {
    double sum = 0.0;
    for (std::uint64_t n = 1; n <= max_terms; ++n) {
        const double term = std::exp(t * static_cast<double>(n)) * pmf(alpha, n);
        sum += term;
        if (n > 100 && term < 1e-18) break;
    }
    return sum;
}

// First positive root of x = xi + alpha (e^x - 1), bisected independently.
inline double fixed_point_log_mgf(double alpha, double xi) {
    auto f = [&](double x) { return xi + alpha * std::expm1(x) - x; };
    double lo = xi;
    double hi = std::log(1.0 / alpha);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

// Composite Simpson quadrature.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

// Total-variation distance between an empirical histogram (index = value) and
// a pmf over nonnegative integers.
inline double tv_distance(const std::vector<double>& empirical_prob,
                          const std::function<double(std::uint64_t)>& pmf,
                          std::uint64_t tail_terms = 200000) {
    double tv = 0.0;
    double pmf_covered = 0.0;
    for (std::size_t n = 0; n < empirical_prob.size(); ++n) {
        const double p = n >= 1 ? pmf(n) : 0.0;
        tv += std::abs(empirical_prob[n] - p);
        pmf_covered += p;
    }
    // Mass of the pmf beyond the empirical support counts fully.
    for (std::uint64_t n = empirical_prob.size(); n <= tail_terms; ++n) {
        const double p = pmf(n);
        tv += p;
        pmf_covered += p;
        if (p < 1e-16 && pmf_covered > 1.0 - 1e-12) break;
    }
    return 0.5 * tv;
}

}  // namespace oracles
