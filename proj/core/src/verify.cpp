#include "hawkes/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hawkes/errors.hpp"
#include "hawkes/parallel.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/stats.hpp"
#include "hawkes/thinning.hpp"

namespace hawkes {

namespace {

// Mean cluster size per root type: Neumann series sum_n H^n 1, convergent for
// subcritical H.
std::vector<double> mean_progeny_vector(const InteractionMatrix& h) {
    std::vector<double> acc(h.size(), 1.0);
    std::vector<double> v(h.size(), 1.0);
    for (int n = 0; n < 100000; ++n) {
        v = h.apply(v);
        double vmax = 0.0, amax = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            acc[i] += v[i];
            vmax = std::max(vmax, v[i]);
            amax = std::max(amax, acc[i]);
        }
        if (vmax <= 1e-14 * amax) break;
    }
    return acc;
}

double expected_window_count(const HawkesModel& model, double length) {
    const std::vector<double> progeny = mean_progeny_vector(model.interaction_matrix());
    double rate = 0.0;
    for (std::size_t m = 0; m < model.types(); ++m)
        rate += model.mu()[m] * progeny[m];
    return length * rate;
}

double certificate_ratio_term(const GeCertificate& cert) {
    return (1.0 + cert.r) / (2.0 * cert.r);
}

}  // namespace

double theorem_bound(const HawkesModel& model, double l, double u,
                     const GeCertificate& cert) {
    if (!(l > 0.0)) throw std::invalid_argument("window length must be positive");
    if (!(u >= 0.0 && u <= 1.0)) {
        std::ostringstream msg;
        msg << "u=" << u << " outside [0,1]";
        throw OutOfRange(msg.str());
    }
    const double mu_sum = model.mu_total();
    const double bound = std::exp((std::pow(certificate_ratio_term(cert), u) - 1.0) *
                                  l * mu_sum);

    // The t-form at t = u * xi_{r,K} is the same number; check the algebra.
    const BoundConstants bc = bound_constants(cert);
    const double t_form = theorem_bound_at_t(model, l, u * bc.xi, cert);
    if (std::abs(t_form - bound) > 1e-9 * std::max(1.0, std::abs(bound)))
        throw std::logic_error("bound forms disagree beyond tolerance");
    return bound;
}

double theorem_bound_at_t(const HawkesModel& model, double l, double t,
                          const GeCertificate& cert) {
    if (!(l > 0.0)) throw std::invalid_argument("window length must be positive");
    const BoundConstants bc = bound_constants(cert);
    if (!(t >= 0.0) || t > bc.xi * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "t=" << t << " outside the certified range [0, " << bc.xi << "]";
        throw OutOfRange(msg.str());
    }
    return std::exp(std::expm1(t * bc.c) * l * model.mu_total());
}

double functional_bound(const HawkesModel& model, const PiecewiseFn& f,
                        double t_period, double xi, const GeCertificate& cert) {
    if (!(t_period > 0.0)) throw std::invalid_argument("period must be positive");
    if (!(xi >= 0.0)) throw std::invalid_argument("xi must be nonnegative");
    const double fold = f_fold_norm(f, t_period);
    const BoundConstants bc = bound_constants(cert);
    if (fold > 0.0 && xi > (bc.xi / fold) * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "xi=" << xi << " outside the certified range [0, " << bc.xi / fold
            << "] for |f|=" << fold;
        throw OutOfRange(msg.str());
    }
    return std::exp(std::expm1(xi * fold * bc.c) * t_period * model.mu_total());
}

const char* to_string(MgfEstimate::Method method) {
    return method == MgfEstimate::Method::clt ? "clt" : "bootstrap";
}

MgfEstimate estimate_mgf(std::span<const double> values, double xi,
                         const EstimateOptions& opts) {
    if (!(xi >= 0.0)) throw std::invalid_argument("xi must be nonnegative");
    if (!(opts.ci_level > 0.0 && opts.ci_level < 1.0))
        throw std::invalid_argument("ci_level must lie in (0,1)");
    if (values.size() < opts.min_samples) {
        std::ostringstream msg;
        msg << "need at least " << opts.min_samples << " replicates, got "
            << values.size();
        throw InsufficientSamples(msg.str());
    }

    std::vector<double> transformed(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        transformed[i] = std::exp(xi * values[i]);

    MgfEstimate out;
    out.n = values.size();
    out.xi = xi;
    const MeanVar mv = mean_var(transformed);
    out.point = mv.mean;

    const bool variance_certified = 2.0 * xi <= opts.certified_xi_max * (1.0 + 1e-12);
    if (variance_certified) {
        out.method = MgfEstimate::Method::clt;
        const double z = normal_quantile(0.5 + 0.5 * opts.ci_level);
        const double se = std::sqrt(mv.var / static_cast<double>(mv.n));
        out.ci_lo = mv.mean - z * se;
        out.ci_hi = mv.mean + z * se;
    } else {
        out.method = MgfEstimate::Method::bootstrap;
        out.heavy_tail_warning = true;
        const int b_count = std::max(1, opts.bootstrap_resamples);
        std::vector<double> means(static_cast<std::size_t>(b_count));
        Rng rng(opts.bootstrap_seed);
        const std::size_t n = transformed.size();
        for (int b = 0; b < b_count; ++b) {
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const auto idx = static_cast<std::size_t>(rng.uniform01() *
                                                          static_cast<double>(n));
                sum += transformed[idx < n ? idx : n - 1];
            }
            means[static_cast<std::size_t>(b)] = sum / static_cast<double>(n);
        }
        std::sort(means.begin(), means.end());
        const double tail = 0.5 * (1.0 - opts.ci_level);
        auto quantile_at = [&](double q) {
            const double pos = q * static_cast<double>(b_count - 1);
            const auto idx = static_cast<std::size_t>(std::llround(pos));
            return means[std::min<std::size_t>(idx, means.size() - 1)];
        };
        out.ci_lo = quantile_at(tail);
        out.ci_hi = quantile_at(1.0 - tail);
    }
    // CIs never exclude the point estimate.
    out.ci_lo = std::min(out.ci_lo, out.point);
    out.ci_hi = std::max(out.ci_hi, out.point);
    return out;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "PASS";
        case Verdict::inconclusive: return "INCONCLUSIVE";
        case Verdict::fail: return "FAIL";
    }
    return "?";
}

Verdict classify_verdict(double ci_lo, double ci_hi, double bound) {
    if (ci_hi <= bound) return Verdict::pass;
    if (ci_lo > bound) return Verdict::fail;
    return Verdict::inconclusive;
}

const char* to_string(Engine e) {
    return e == Engine::cluster ? "cluster" : "thinning";
}

bool BoundReport::any_fail() const {
    for (const auto& p : grid)
        if (p.verdict == Verdict::fail) return true;
    return false;
}

namespace {

struct PreparedRun {
    double burn_in = 0.0;
    double check_value = 0.0;
};

// Doubles burn_in until the truncation proxy passes; throws NonConvergence if
// it cannot within the doubling cap.
PreparedRun settle_burn_in(const HawkesModel& model, double a, double b,
                           double burn_in, std::uint64_t seed,
                           const VerificationOptions& opts) {
    PreparedRun out;
    out.burn_in = burn_in;
    if (model.mu_total() == 0.0) return out;

    const double expected = expected_window_count(model, b - a);
    const double eps = opts.burn_in_epsilon_fraction * expected;
    const std::uint64_t check_master = derive_seed(seed, 0xB0B0B0B0ULL);
    for (int attempt = 0; attempt <= opts.max_burn_in_doublings; ++attempt) {
        out.check_value = burn_in_check(model, a, b, out.burn_in, opts.n_probe,
                                        derive_seed(check_master, attempt), opts.caps);
        if (out.check_value < eps) return out;
        out.burn_in *= 2.0;
    }
    std::ostringstream msg;
    msg << "burn-in check still " << out.check_value << " (tolerance " << eps
        << ") after " << opts.max_burn_in_doublings << " doublings";
    throw NonConvergence(msg.str());
}

EventSequence simulate_one(const HawkesModel& model, double a, double b,
                           double burn_in, Engine engine, std::uint64_t rep_seed,
                           const SimulationCaps& caps) {
    return engine == Engine::cluster
               ? simulate_window(model, a, b, burn_in, rep_seed, caps)
               : simulate_thinning(model, a, b, burn_in, rep_seed, caps);
}

// Runs the replicates and reduces each window to a scalar via `reduce`.
template <class Reduce>
std::vector<double> replicate_values(const HawkesModel& model, double a, double b,
                                     double burn_in, Engine engine,
                                     std::uint64_t seed, std::size_t n_reps,
                                     const VerificationOptions& opts,
                                     Reduce&& reduce) {
    std::vector<double> values(n_reps);
    parallel_for_index(n_reps, opts.threads, [&](std::size_t i) {
        try {
            const EventSequence seq = simulate_one(model, a, b, burn_in, engine,
                                                   derive_seed(seed, i), opts.caps);
            values[i] = reduce(seq);
        } catch (const NodeCapExceeded& e) {
            throw NodeCapExceeded(std::string(e.what()) + " (replicate " +
                                      std::to_string(i) + ")",
                                  i);
        }
    });
    return values;
}

}  // namespace

BoundReport run_verification(const HawkesModel& model, double a, double b,
                             std::span<const double> u_grid, std::size_t n_reps,
                             double burn_in, Engine engine, std::uint64_t seed,
                             const GeCertificate& cert,
                             const VerificationOptions& opts) {
    if (!(a < b)) throw std::invalid_argument("window must satisfy a < b");
    for (double u : u_grid)
        if (!(u >= 0.0 && u <= 1.0)) throw OutOfRange("grid fractions must lie in [0,1]");

    const PreparedRun prep = settle_burn_in(model, a, b, burn_in, seed, opts);
    const std::vector<double> counts = replicate_values(
        model, a, b, prep.burn_in, engine, seed, n_reps, opts,
        [](const EventSequence& seq) { return static_cast<double>(seq.size()); });

    const BoundConstants bc = bound_constants(cert);
    BoundReport report{model, cert, {}, seed, engine, a, b,
                       prep.burn_in, prep.check_value, n_reps, 0.0, 0.0,
                       std::nullopt};
    const MeanVar count_mv = mean_var(counts);
    report.mean_value = count_mv.mean;
    report.se_value = std::sqrt(count_mv.var / static_cast<double>(count_mv.n));
    const std::uint64_t boot_master = derive_seed(seed, 0xB007B007ULL);
    for (std::size_t gi = 0; gi < u_grid.size(); ++gi) {
        const double u = u_grid[gi];
        BoundReportPoint pt;
        pt.u = u;
        pt.xi = u * bc.xi;
        pt.bound = theorem_bound(model, b - a, u, cert);
        EstimateOptions est;
        est.ci_level = opts.ci_level;
        est.certified_xi_max = bc.xi;
        est.bootstrap_seed = derive_seed(boot_master, gi);
        pt.mgf = estimate_mgf(counts, pt.xi, est);
        pt.verdict = classify_verdict(pt.mgf.ci_lo, pt.mgf.ci_hi, pt.bound);
        report.grid.push_back(pt);
    }
    return report;
}

BoundReport run_functional_verification(const HawkesModel& model,
                                        const PiecewiseFn& f, double t_period,
                                        std::span<const double> u_grid,
                                        std::size_t n_reps, double burn_in,
                                        Engine engine, std::uint64_t seed,
                                        const GeCertificate& cert,
                                        const VerificationOptions& opts) {
    if (f.is_zero())
        throw std::invalid_argument("functional verification needs a nonzero f");
    for (double u : u_grid)
        if (!(u >= 0.0 && u <= 1.0)) throw OutOfRange("grid fractions must lie in [0,1]");

    const double a = f.support_lo();
    const double b = f.support_hi();
    const double fold = f_fold_norm(f, t_period);
    const BoundConstants bc = bound_constants(cert);
    const double xi_admissible = bc.xi / fold;

    const PreparedRun prep = settle_burn_in(model, a, b, burn_in, seed, opts);
    const std::vector<double> nf_values = replicate_values(
        model, a, b, prep.burn_in, engine, seed, n_reps, opts,
        [&](const EventSequence& seq) {
            double s = 0.0;
            for (const auto& e : seq.events) s += f.value_at(e.time);
            return s;
        });

    BoundReport report{model, cert, {}, seed, engine, a, b,
                       prep.burn_in, prep.check_value, n_reps, 0.0, 0.0,
                       FunctionalSpec{f, t_period, fold}};
    const MeanVar nf_mv = mean_var(nf_values);
    report.mean_value = nf_mv.mean;
    report.se_value = std::sqrt(nf_mv.var / static_cast<double>(nf_mv.n));
    const std::uint64_t boot_master = derive_seed(seed, 0xB007B007ULL);
    for (std::size_t gi = 0; gi < u_grid.size(); ++gi) {
        const double u = u_grid[gi];
        BoundReportPoint pt;
        pt.u = u;
        pt.xi = u * xi_admissible;
        pt.bound = functional_bound(model, f, t_period, pt.xi, cert);
        EstimateOptions est;
        est.ci_level = opts.ci_level;
        est.certified_xi_max = xi_admissible;
        est.bootstrap_seed = derive_seed(boot_master, gi);
        pt.mgf = estimate_mgf(nf_values, pt.xi, est);
        pt.verdict = classify_verdict(pt.mgf.ci_lo, pt.mgf.ci_hi, pt.bound);
        report.grid.push_back(pt);
    }
    return report;
}

}  // namespace hawkes
