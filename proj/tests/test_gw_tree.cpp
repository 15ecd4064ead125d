#include <doctest.h>

#include <cmath>
#include <vector>

#include "hawkes/errors.hpp"
#include "hawkes/gw_tree.hpp"
#include "hawkes/stats.hpp"
#include "support/oracles.hpp"

using namespace hawkes;

namespace {
const InteractionMatrix kTwoType{{0.3, 0.2}, {0.1, 0.4}};
const InteractionMatrix kHalf{{0.5}};
}

TEST_CASE("zero offspring means a single root") {
    for (int root : {0, 1}) {
        const auto res = sample_gw_tree(InteractionMatrix::zero(2), root, 7u);
        CHECK(res.tree.size() == 1);
        CHECK_FALSE(res.truncated);
        CHECK(res.tree.nodes[0].type == root);
    }
}

TEST_CASE("sampled trees satisfy the labeling invariants") {
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        const auto res = sample_gw_tree(kTwoType, i % 2, rng);
        res.tree.validate();
        if (res.tree.size() > 1) {
            const auto label = res.tree.label_of(res.tree.size() - 1);
            CHECK(!label.empty());
        }
        CHECK(res.tree.label_of(0).empty());
    }
}

TEST_CASE("sampling is deterministic given the seed") {
    const auto a = sample_gw_tree(kTwoType, 0, 1234u);
    const auto b = sample_gw_tree(kTwoType, 0, 1234u);
    REQUIRE(a.tree.size() == b.tree.size());
    for (std::size_t i = 0; i < a.tree.size(); ++i) {
        CHECK(a.tree.nodes[i].parent == b.tree.nodes[i].parent);
        CHECK(a.tree.nodes[i].type == b.tree.nodes[i].type);
    }
}

TEST_CASE("node cap truncates and reports the partial tree") {
    Rng rng(5);
    bool saw_truncation = false;
    for (int i = 0; i < 500; ++i) {
        const auto res = sample_gw_tree(InteractionMatrix{{0.95}}, 0, rng, 8);
        CHECK(res.tree.size() <= 8);
        saw_truncation = saw_truncation || res.truncated;
    }
    CHECK(saw_truncation);
}

TEST_CASE("mean total progeny matches the Neumann oracle") {
    // E|T| = 1/(1-alpha) = 2 for alpha = 0.5; e_1^T (I-H)^{-1} 1 = 2 for the
    // 2-type matrix.
    constexpr std::size_t n = 100000;
    Rng rng(2024);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        sum += static_cast<double>(sample_gw_tree(kHalf, 0, rng).tree.size());
    CHECK(oracles::neumann_mean_progeny(kHalf, 0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sum / n == doctest::Approx(2.0).epsilon(0.025));

    double sum2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        sum2 += static_cast<double>(sample_gw_tree(kTwoType, 0, rng).tree.size());
    CHECK(oracles::neumann_mean_progeny(kTwoType, 0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(sum2 / n == doctest::Approx(2.0).epsilon(0.025));
}

TEST_CASE("empirical progeny law matches the Borel pmf in total variation") {
    constexpr std::size_t n = 100000;
    Rng rng(31337);
    std::vector<double> hist;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t size = sample_gw_tree(kHalf, 0, rng).tree.size();
        if (size >= hist.size()) hist.resize(size + 1, 0.0);
        hist[size] += 1.0 / static_cast<double>(n);
    }
    const double tv = oracles::tv_distance(
        hist, [](std::uint64_t k) { return borel_progeny_pmf(0.5, k); });
    CHECK(tv < 0.01);
}

TEST_CASE("borel pmf closed-form spots and normalization") {
    CHECK(borel_progeny_pmf(0.5, 1) == doctest::Approx(std::exp(-0.5)).epsilon(1e-15));
    CHECK(borel_progeny_pmf(0.0, 1) == 1.0);
    CHECK(borel_progeny_pmf(0.0, 2) == 0.0);
    double sum = 0.0;
    for (std::uint64_t k = 1; k <= 10000; ++k) sum += borel_progeny_pmf(0.5, k);
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("mgf recursion closed-form steps") {
    const auto zero_t = gw_mgf_recursion(kTwoType, 0.0, 25);
    for (double g : zero_t.g) CHECK(g == 0.0);

    const auto one_step = gw_mgf_recursion(kHalf, 0.1, 1);
    CHECK(one_step.g[0] == doctest::Approx(0.15258545903782381).epsilon(1e-14));

    const auto limit = gw_mgf_limit(kHalf, 0.1);
    CHECK_FALSE(limit.diverged());
    CHECK(limit.g[0] == doctest::Approx(0.22811470898405108).epsilon(1e-9));
    CHECK(limit.g[0] ==
          doctest::Approx(oracles::fixed_point_log_mgf(0.5, 0.1)).epsilon(1e-9));
}

TEST_CASE("mgf recursion is monotone in generations and in t") {
    std::vector<double> prev(kTwoType.size(), -1.0);
    for (int n : {0, 1, 2, 4, 8, 16}) {
        const auto res = gw_mgf_recursion(kTwoType, 0.05, n);
        for (std::size_t m = 0; m < res.g.size(); ++m) {
            CHECK(res.g[m] >= prev[m]);
            if (n == 0) CHECK(res.g[m] == 0.05);  // g_0 = t exactly
        }
        prev = res.g;
    }
    double prev_val = -1.0;
    for (double t : {0.0, 0.01, 0.03, 0.05, 0.07}) {
        const auto res = gw_mgf_recursion(kTwoType, t, 32);
        CHECK(res.g[0] >= prev_val);
        prev_val = res.g[0];
    }
}

TEST_CASE("mgf recursion reports divergence beyond the abscissa") {
    // xi_max(0.5) ~ 0.1931: t = 0.5 has no fixed point.
    const auto res = gw_mgf_limit(kHalf, 0.5);
    CHECK(res.diverged());
    CHECK(res.diverged_at.value() > 0);
    // Below the abscissa nothing diverges.
    CHECK_FALSE(gw_mgf_limit(kHalf, 0.1).diverged());
}

TEST_CASE("recursion limit respects the certified linear bound") {
    struct Case {
        InteractionMatrix h;
        double r;
    };
    const Case cases[] = {
        {kHalf, 0.5},
        {kTwoType, 0.5},
        {kTwoType, 0.7},
        {{{0.0, 0.8}, {0.2, 0.0}}, 0.5},
        {InteractionMatrix::zero(2), 0.3},
    };
    for (const auto& c : cases) {
        const GeCertificate cert = ge_certificate(c.h, c.r);
        const BoundConstants bc = bound_constants(cert);
        for (double frac : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            const double t = frac * bc.xi;
            const auto lim = gw_mgf_limit(c.h, t);
            REQUIRE_FALSE(lim.diverged());
            double worst = 0.0;
            for (double g : lim.g) worst = std::max(worst, g);
            CHECK(worst <= gw_mgf_bound(cert, t) + 1e-9);
        }
    }
}

TEST_CASE("gw_mgf_bound endpoints and range check") {
    const GeCertificate cert = ge_certificate(kTwoType, 0.5);
    CHECK(gw_mgf_bound(cert, 0.0) == 0.0);
    const double xi = bound_constants(cert).xi;
    CHECK(gw_mgf_bound(cert, xi) == doctest::Approx(0.4054651081081644).epsilon(1e-12));
    CHECK_THROWS_AS((void)gw_mgf_bound(cert, xi * 1.01), OutOfRange);

    const GeCertificate zero_cert = ge_certificate(InteractionMatrix::zero(2), 0.5);
    CHECK(gw_mgf_bound(zero_cert, 0.2) == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("sampling agrees with the recursion limit on the MGF scale") {
    // E exp(t|T|) over 10^6 trees vs exp(g_inf(t)) within a 99% CLT interval.
    constexpr std::size_t n = 1000000;
    constexpr double t = 0.1;
    Rng rng(777);
    std::vector<double> vals(n);
    for (std::size_t i = 0; i < n; ++i)
        vals[i] = std::exp(t * static_cast<double>(sample_gw_tree(kHalf, 0, rng).tree.size()));
    const MeanVar mv = mean_var(vals);
    const double target = std::exp(gw_mgf_limit(kHalf, t).g[0]);
    const double half_width = normal_quantile(0.995) * std::sqrt(mv.var / n);
    CHECK(std::abs(mv.mean - target) <= half_width);
}

TEST_CASE("univariate exact abscissa and its log-MGF") {
    const UnivariateXi uni = univariate_optimal_xi(0.5);
    CHECK(uni.xi_max == doctest::Approx(0.19314718055994531).epsilon(1e-14));
    CHECK(uni.x_star == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(uni.log_mgf(0.1) == doctest::Approx(0.22811470898405108).epsilon(1e-9));
    CHECK(uni.log_mgf(0.0) == 0.0);
    CHECK_THROWS_AS((void)uni.log_mgf(0.25), OutOfRange);
    CHECK_THROWS_AS((void)univariate_optimal_xi(1.0), std::invalid_argument);
}

TEST_CASE("certified abscissa is strictly below the exact univariate one") {
    for (double alpha : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const GeCertificate cert = ge_certificate(InteractionMatrix{{alpha}}, alpha);
        CHECK(cert.k == doctest::Approx(1.0).epsilon(1e-12));
        const double certified = bound_constants(cert).xi;
        const double exact = univariate_optimal_xi(alpha).xi_max;
        CHECK(certified < exact);
    }
}
