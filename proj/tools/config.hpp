#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hawkes/hawkes_model.hpp"
#include "hawkes/piecewise_fn.hpp"
#include "hawkes/spectral.hpp"
#include "hawkes/verify.hpp"

namespace hawkes::cli {

// One structured file captures a whole experiment, seed included, so any run
// can be replayed from the artifact alone. Unknown fields are rejected at
// every level. Command-line flags override the corresponding fields.
struct ExperimentConfig {
    // model
    std::vector<double> mu;
    std::vector<std::vector<KernelSpec>> kernels;

    // window & simulation
    double window_a = 0.0;
    double window_b = 1.0;
    double burn_in_initial = 8.0;
    bool burn_in_auto = true;
    double burn_in_epsilon_fraction = 1e-3;
    int burn_in_max_doublings = 24;
    std::size_t n_reps = 10000;
    std::uint64_t seed = 1;
    Engine engine = Engine::cluster;
    int threads = 0;
    SimulationCaps caps;
    double ci_level = 0.99;

    // evaluation grid: fractions of the certified abscissa, or absolute xi
    std::vector<double> u_grid{0.25, 0.5, 0.75, 1.0};
    std::optional<std::vector<double>> xi_grid;

    // optional functional target N(f)
    std::optional<PiecewiseFn> f;
    double f_period = 1.0;

    // certificate policy
    bool cert_optimize = true;  // false: fixed ratio below
    double cert_r = 0.5;
    int cert_n_cap = 400;
    int cert_grid = 256;

    // gw subcommand knobs
    int gw_root_type = 1;  // 1-based in the config
    double gw_t = 0.1;
    int gw_generations = 50;
    std::size_t gw_samples = 100000;

    // output
    std::string out_dir = ".";
    bool svg = false;

    InteractionMatrix interaction_matrix() const;
    HawkesModel build_model() const;
    GeCertificate resolve_certificate(const InteractionMatrix& h) const;
    VerificationOptions verification_options() const;
};

ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);

}  // namespace hawkes::cli
