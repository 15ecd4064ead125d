#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "hawkes/kernels.hpp"
#include "support/oracles.hpp"

using namespace hawkes;

TEST_CASE("l1 norm equals the mass parameter for every family") {
    CHECK(KernelSpec::null().l1_norm() == 0.0);
    CHECK(KernelSpec::exponential(0.3, 2.0).l1_norm() == 0.3);
    CHECK(KernelSpec::uniform(0.7, 1.5).l1_norm() == 0.7);
    CHECK(KernelSpec::pareto(0.4, 0.5, 1.5).l1_norm() == 0.4);
}

TEST_CASE("normalized densities integrate to one") {
    const KernelSpec expk = KernelSpec::exponential(0.5, 1.3);
    const KernelSpec unif = KernelSpec::uniform(1.0, 2.5);
    const KernelSpec par = KernelSpec::pareto(0.2, 0.5, 1.5);

    // Quadrature over the smooth head plus the analytic tail beyond it; the
    // uniform kernel is constant on its support, so its head integral is exact.
    auto integral = [](const KernelSpec& k, double hi) {
        return oracles::simpson([&](double t) { return k.density(t); }, 0.0, hi, 40000) +
               k.tail_mass_fraction(hi);
    };
    CHECK(integral(expk, 10.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integral(unif, 2.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(integral(par, 5.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("tail mass fractions are analytic") {
    CHECK(KernelSpec::exponential(1.0, 2.0).tail_mass_fraction(3.0) ==
          doctest::Approx(std::exp(-6.0)).epsilon(1e-14));
    CHECK(KernelSpec::uniform(1.0, 2.0).tail_mass_fraction(2.0) == 0.0);
    CHECK(KernelSpec::uniform(1.0, 2.0).tail_mass_fraction(0.5) ==
          doctest::Approx(0.75).epsilon(1e-14));
    CHECK(KernelSpec::pareto(1.0, 0.5, 1.5).tail_mass_fraction(0.5) ==
          doctest::Approx(std::pow(0.5, 1.5)).epsilon(1e-14));
}

TEST_CASE("densities are nonincreasing on the positive axis") {
    const KernelSpec kernels[] = {KernelSpec::exponential(1.0, 0.7),
                                  KernelSpec::uniform(1.0, 1.2),
                                  KernelSpec::pareto(1.0, 0.4, 2.5)};
    for (const auto& k : kernels) {
        double prev = k.density(0.0);
        for (double t = 0.01; t < 5.0; t += 0.01) {
            const double cur = k.density(t);
            CHECK(cur <= prev + 1e-15);
            prev = cur;
        }
    }
}

TEST_CASE("gap samples follow the normalized law") {
    Rng rng(11);
    constexpr int n = 100000;

    // Exponential: normalized density of a*exp(-b t) is Exp(b); mean 1/b.
    const KernelSpec expk = KernelSpec::exponential(0.5, 1.0);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = expk.sample_gap(rng);
        CHECK(g > 0.0);
        sum += g;
    }
    CHECK(sum / n == doctest::Approx(1.0).epsilon(0.01));

    // Uniform: mean width/2, all draws inside (0, width).
    const KernelSpec unif = KernelSpec::uniform(1.0, 2.0);
    sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double g = unif.sample_gap(rng);
        CHECK(g > 0.0);
        CHECK(g < 2.0);
        sum += g;
    }
    CHECK(sum / n == doctest::Approx(1.0).epsilon(0.01));

    // Pareto shape 1.5 has infinite variance; check the median instead:
    // median = x_min (2^{1/shape} - 1).
    const KernelSpec par = KernelSpec::pareto(1.0, 0.5, 1.5);
    std::vector<double> gaps(n);
    for (int i = 0; i < n; ++i) gaps[i] = par.sample_gap(rng);
    std::nth_element(gaps.begin(), gaps.begin() + n / 2, gaps.end());
    const double median_expected = 0.5 * (std::pow(2.0, 1.0 / 1.5) - 1.0);
    CHECK(gaps[n / 2] == doctest::Approx(median_expected).epsilon(0.02));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS((void)KernelSpec::exponential(-0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)KernelSpec::exponential(0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS((void)KernelSpec::uniform(0.1, -1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)KernelSpec::pareto(0.1, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS((void)KernelSpec::pareto(0.1, 0.0, 1.5), std::invalid_argument);
    Rng rng(1);
    CHECK_THROWS_AS((void)KernelSpec::null().sample_gap(rng), std::logic_error);
}
