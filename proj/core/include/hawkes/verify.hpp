#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hawkes/cluster.hpp"
#include "hawkes/hawkes_model.hpp"
#include "hawkes/piecewise_fn.hpp"
#include "hawkes/spectral.hpp"

namespace hawkes {

// Closed-form bound on E[exp(u * xi_{r,K} * N(B))] for B in a window of
// length l and u in [0,1]:  exp([((1+r)/(2r))^u - 1] * l * sum(mu)).
// Internally cross-checked against the equivalent t-form at t = u*xi_{r,K}.
double theorem_bound(const HawkesModel& model, double l, double u,
                     const GeCertificate& cert);

// The same bound parameterized by t in [0, xi_{r,K}]:
//   exp([e^{t * C_{r,K}} - 1] * l * sum(mu)).
double theorem_bound_at_t(const HawkesModel& model, double l, double t,
                          const GeCertificate& cert);

// Bound on E[exp(xi * N(f))] for a nonnegative step function f and period T:
//   exp([e^{xi * |f| * C_{r,K}} - 1] * T * sum(mu)),  0 <= xi <= xi_{r,K}/|f|,
// with |f| the folded norm sup_t sum_n f(t + nT). Reduces exactly to
// theorem_bound for f = 1_[0,L) with T = L.
double functional_bound(const HawkesModel& model, const PiecewiseFn& f,
                        double t_period, double xi, const GeCertificate& cert);

struct MgfEstimate {
    enum class Method { clt, bootstrap };

    double point = 1.0;  // sample mean of exp(xi * X)
    double ci_lo = 1.0;
    double ci_hi = 1.0;
    std::size_t n = 0;
    Method method = Method::clt;
    double xi = 0.0;
    // Set when the variance proxy exp(2*xi*X) is not certified integrable
    // (2*xi above the certified abscissa): the CLT interval would lean on
    // integrability the theorem under test does not grant, so a bootstrap
    // percentile interval is used instead.
    bool heavy_tail_warning = false;
};

const char* to_string(MgfEstimate::Method method);

struct EstimateOptions {
    double ci_level = 0.99;
    // CLT applies only while 2*xi stays within this certified range.
    double certified_xi_max = std::numeric_limits<double>::infinity();
    int bootstrap_resamples = 2000;
    std::uint64_t bootstrap_seed = 0x51a7e5eedULL;
    std::size_t min_samples = 100;
};

// Mean of exp(xi * X) over replicate values with a confidence interval.
// Throws InsufficientSamples below opts.min_samples.
MgfEstimate estimate_mgf(std::span<const double> values, double xi,
                         const EstimateOptions& opts = {});

enum class Verdict { pass, inconclusive, fail };
const char* to_string(Verdict v);

// Pure three-way comparison: PASS if the CI sits at or below the bound,
// FAIL if it sits strictly above, INCONCLUSIVE when it straddles.
Verdict classify_verdict(double ci_lo, double ci_hi, double bound);

enum class Engine { cluster, thinning };
const char* to_string(Engine e);

struct BoundReportPoint {
    double u = 0.0;   // fraction of the admissible xi range
    double xi = 0.0;  // evaluation point
    double bound = 1.0;
    MgfEstimate mgf;
    Verdict verdict = Verdict::inconclusive;
};

struct FunctionalSpec {
    PiecewiseFn f;
    double t_period = 1.0;
    double fold_norm = 0.0;
};

struct BoundReport {
    HawkesModel model;
    GeCertificate cert;
    std::vector<BoundReportPoint> grid;
    std::uint64_t seed = 0;
    Engine engine = Engine::cluster;
    double window_a = 0.0;
    double window_b = 0.0;
    double burn_in = 0.0;             // effective value after doubling
    double burn_in_check_value = 0.0; // final probe estimate
    std::size_t n_reps = 0;
    double mean_value = 0.0;          // mean of N(B) (or N(f)) over replicates
    double se_value = 0.0;            // its standard error
    std::optional<FunctionalSpec> functional;

    bool any_fail() const;
};

struct VerificationOptions {
    double ci_level = 0.99;
    std::size_t n_probe = 50000;            // burn-in check probes
    double burn_in_epsilon_fraction = 1e-3; // of the expected window count
    int max_burn_in_doublings = 24;
    int threads = 0;  // 0 = hardware concurrency
    SimulationCaps caps;
};

// Simulates n_reps windows with the chosen engine, estimates the MGF of N(B)
// at xi = u * xi_{r,K} for each u in the grid, and compares with the bound.
// The burn-in check runs first (doubling burn_in until the truncation proxy
// drops below the tolerance); the effective burn-in is recorded. Simulator
// errors propagate annotated with the replicate index. Deterministic for a
// fixed seed, independent of the thread count.
BoundReport run_verification(const HawkesModel& model, double a, double b,
                             std::span<const double> u_grid, std::size_t n_reps,
                             double burn_in, Engine engine, std::uint64_t seed,
                             const GeCertificate& cert,
                             const VerificationOptions& opts = {});

// Same harness for N(f) = sum_i f(t_i): xi grid given as fractions u of the
// admissible range xi_{r,K} / |f|. The simulation window must cover the
// support of f.
BoundReport run_functional_verification(const HawkesModel& model,
                                        const PiecewiseFn& f, double t_period,
                                        std::span<const double> u_grid,
                                        std::size_t n_reps, double burn_in,
                                        Engine engine, std::uint64_t seed,
                                        const GeCertificate& cert,
                                        const VerificationOptions& opts = {});

// Serialization of reports (JSON object and flat CSV, one row per grid point).
std::string report_to_json(const BoundReport& report);
void write_report_csv(const BoundReport& report, std::ostream& os);

}  // namespace hawkes
