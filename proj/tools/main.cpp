#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "config.hpp"
#include "hawkes/cluster.hpp"
#include "hawkes/errors.hpp"
#include "hawkes/gw_tree.hpp"
#include "hawkes/thinning.hpp"
#include "hawkes/verify.hpp"
#include "svg_plot.hpp"

namespace {

using namespace hawkes;
using cli::ExperimentConfig;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitAnalysis = 2;
constexpr int kExitSimulationCap = 3;
constexpr int kExitBoundFail = 4;

struct Overrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> threads;
    std::optional<std::string> out_dir;
    bool svg = false;
};

ExperimentConfig load_with_overrides(const Overrides& ov) {
    ExperimentConfig cfg = cli::load_config(ov.config_path);
    if (ov.seed) cfg.seed = *ov.seed;
    if (ov.threads) cfg.threads = *ov.threads;
    if (ov.out_dir) cfg.out_dir = *ov.out_dir;
    if (ov.svg) cfg.svg = true;
    return cfg;
}

std::filesystem::path ensure_out_dir(const ExperimentConfig& cfg) {
    std::filesystem::path dir(cfg.out_dir);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
}

int cmd_analyze(const Overrides& ov) {
    const ExperimentConfig cfg = load_with_overrides(ov);
    const InteractionMatrix h = cfg.interaction_matrix();
    const double spr = spectral_radius(h);

    nlohmann::json out;
    out["spectral_radius"] = spr;
    out["operator_norm_inf"] = operator_norm_inf(h);

    const GeCertificate cert = cfg.resolve_certificate(h);
    const BoundConstants bc = bound_constants(cert);
    out["certificate"] = {{"r", cert.r}, {"k", cert.k},
                          {"proof_horizon", cert.proof_horizon}};
    out["xi"] = bc.xi;
    out["c"] = bc.c;
    out["xi_unbounded"] = bc.xi_unbounded;

    std::printf("spectral radius     %.12g\n", spr);
    std::printf("certificate         r=%.12g  K=%.12g  horizon=%d\n", cert.r, cert.k,
                cert.proof_horizon);
    std::printf("xi (abscissa)       %.12g\n", bc.xi);
    std::printf("C (multiplier)      %.12g\n", bc.c);
    if (bc.xi_unbounded)
        std::printf("note: zero interactions, xi grows without bound as r -> 0\n");

    if (h.size() == 1) {
        const double alpha = h(0, 0);
        if (alpha > 0.0 && alpha < 1.0) {
            const UnivariateXi uni = univariate_optimal_xi(alpha);
            out["univariate"] = {{"alpha", alpha}, {"xi_max", uni.xi_max},
                                 {"x_star", uni.x_star}};
            std::printf("exact univariate    xi_max=%.12g (certified xi is not optimal)\n",
                        uni.xi_max);
        }
    }

    const auto dir = ensure_out_dir(cfg);
    write_file(dir / "analyze.json", out.dump(2) + "\n");
    return kExitOk;
}

int cmd_simulate(const Overrides& ov) {
    const ExperimentConfig cfg = load_with_overrides(ov);
    const HawkesModel model = cfg.build_model();
    const EventSequence seq =
        cfg.engine == Engine::cluster
            ? simulate_window(model, cfg.window_a, cfg.window_b, cfg.burn_in_initial,
                              cfg.seed, cfg.caps)
            : simulate_thinning(model, cfg.window_a, cfg.window_b, cfg.burn_in_initial,
                                cfg.seed, cfg.caps);
    const auto dir = ensure_out_dir(cfg);
    std::ofstream out(dir / "events.csv", std::ios::binary);
    seq.to_csv(out);
    std::printf("wrote %zu events to %s\n", seq.size(),
                (dir / "events.csv").string().c_str());
    if (seq.has_ties) std::printf("note: tied float timestamps present\n");
    return kExitOk;
}

int cmd_verify(const Overrides& ov) {
    const ExperimentConfig cfg = load_with_overrides(ov);
    const HawkesModel model = cfg.build_model();
    const GeCertificate cert = cfg.resolve_certificate(model.interaction_matrix());
    const BoundConstants bc = bound_constants(cert);
    const VerificationOptions opts = cfg.verification_options();

    // xi_grid entries are absolute evaluation points; convert to fractions of
    // the admissible range.
    std::vector<double> u_grid = cfg.u_grid;
    const double fold = cfg.f ? f_fold_norm(*cfg.f, cfg.f_period) : 1.0;
    const double xi_range = cfg.f ? bc.xi / fold : bc.xi;
    if (cfg.xi_grid) {
        u_grid.clear();
        for (double xi : *cfg.xi_grid) {
            if (xi > xi_range * (1.0 + 1e-12))
                throw OutOfRange("xi_grid entry exceeds the certified range");
            u_grid.push_back(xi / xi_range);
        }
    }

    const BoundReport report =
        cfg.f ? run_functional_verification(model, *cfg.f, cfg.f_period, u_grid,
                                            cfg.n_reps, cfg.burn_in_initial, cfg.engine,
                                            cfg.seed, cert, opts)
              : run_verification(model, cfg.window_a, cfg.window_b, u_grid, cfg.n_reps,
                                 cfg.burn_in_initial, cfg.engine, cfg.seed, cert, opts);

    for (const auto& p : report.grid)
        std::printf("u=%-6.4g xi=%-10.6g bound=%-12.8g mgf=%-12.8g ci=[%.8g, %.8g] %s %s\n",
                    p.u, p.xi, p.bound, p.mgf.point, p.mgf.ci_lo, p.mgf.ci_hi,
                    to_string(p.mgf.method), to_string(p.verdict));
    std::printf("burn-in %.6g (check value %.6g), %zu replicates, engine %s\n",
                report.burn_in, report.burn_in_check_value, report.n_reps,
                to_string(report.engine));

    const auto dir = ensure_out_dir(cfg);
    write_file(dir / "report.json", report_to_json(report) + "\n");
    std::ofstream csv(dir / "report.csv", std::ios::binary);
    write_report_csv(report, csv);
    if (cfg.svg) write_file(dir / "report.svg", cli::render_bound_svg(report));

    return report.any_fail() ? kExitBoundFail : kExitOk;
}

int cmd_gw(const Overrides& ov) {
    const ExperimentConfig cfg = load_with_overrides(ov);
    const InteractionMatrix h = cfg.interaction_matrix();
    const int root = cfg.gw_root_type - 1;

    Rng rng(cfg.seed);
    double sum = 0.0;
    std::size_t max_size = 0, truncated = 0;
    for (std::size_t i = 0; i < cfg.gw_samples; ++i) {
        const auto res = sample_gw_tree(h, root, rng, cfg.caps.max_cluster_nodes);
        sum += static_cast<double>(res.tree.size());
        max_size = std::max(max_size, res.tree.size());
        if (res.truncated) ++truncated;
    }
    const double mean_size = sum / static_cast<double>(cfg.gw_samples);

    nlohmann::json out;
    out["root_type"] = cfg.gw_root_type;
    out["n_samples"] = cfg.gw_samples;
    out["mean_size"] = mean_size;
    out["max_size"] = max_size;
    out["truncated"] = truncated;

    const auto rec = gw_mgf_recursion(h, cfg.gw_t, cfg.gw_generations);
    const auto lim = gw_mgf_limit(h, cfg.gw_t);
    out["recursion"] = {{"t", cfg.gw_t}, {"generations", rec.generations}};
    if (rec.diverged()) out["recursion"]["diverged_at"] = *rec.diverged_at;
    else out["recursion"]["g"] = rec.g;
    if (lim.diverged()) out["recursion"]["limit_diverged_at"] = *lim.diverged_at;
    else out["recursion"]["g_limit"] = lim.g;

    std::printf("sampled %zu trees from type %d: mean size %.6g, max %zu, truncated %zu\n",
                cfg.gw_samples, cfg.gw_root_type, mean_size, max_size, truncated);
    if (lim.diverged())
        std::printf("log-MGF recursion at t=%.6g diverges at generation %d\n", cfg.gw_t,
                    *lim.diverged_at);
    else
        std::printf("log-MGF recursion limit at t=%.6g: g=%.10g (%d generations)\n",
                    cfg.gw_t, lim.g[static_cast<std::size_t>(root)], lim.generations);

    if (h.size() == 1 && h(0, 0) > 0.0 && h(0, 0) < 1.0) {
        const UnivariateXi uni = univariate_optimal_xi(h(0, 0));
        out["univariate"] = {{"xi_max", uni.xi_max}};
        std::printf("exact univariate abscissa xi_max=%.10g\n", uni.xi_max);
    }

    const auto dir = ensure_out_dir(cfg);
    write_file(dir / "gw.json", out.dump(2) + "\n");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stationary multivariate Hawkes processes: closed-form "
                 "exponential-moment bounds from the interaction matrix, with "
                 "Monte Carlo verification via cluster and thinning simulators"};
    app.require_subcommand(1);

    Overrides ov;
    std::uint64_t seed_val = 0;
    int threads_val = 0;
    std::string out_val;
    std::vector<CLI::Option*> seed_opts, threads_opts, out_opts, svg_flags;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", ov.config_path, "experiment config (JSON)")
            ->required()
            ->check(CLI::ExistingFile);
        seed_opts.push_back(sub->add_option("--seed", seed_val, "override config seed"));
        threads_opts.push_back(
            sub->add_option("--threads", threads_val, "replicate worker count (0 = auto)"));
        out_opts.push_back(sub->add_option("--out", out_val, "output directory"));
        svg_flags.push_back(sub->add_flag("--svg", "also write the SVG plot (verify)"));
    };

    auto* analyze = app.add_subcommand("analyze", "spectral radius, certificate, constants");
    auto* simulate = app.add_subcommand("simulate", "one window realization to CSV");
    auto* verify = app.add_subcommand("verify", "Monte Carlo MGF vs theoretical bound");
    auto* gw = app.add_subcommand("gw", "tree statistics and log-MGF recursion");
    for (CLI::App* sub : {analyze, simulate, verify, gw}) add_common(sub);

    CLI11_PARSE(app, argc, argv);

    for (auto* o : seed_opts)
        if (*o) ov.seed = seed_val;
    for (auto* o : threads_opts)
        if (*o) ov.threads = threads_val;
    for (auto* o : out_opts)
        if (*o) ov.out_dir = out_val;
    for (auto* o : svg_flags)
        if (*o) ov.svg = true;

    try {
        if (analyze->parsed()) return cmd_analyze(ov);
        if (simulate->parsed()) return cmd_simulate(ov);
        if (verify->parsed()) return cmd_verify(ov);
        if (gw->parsed()) return cmd_gw(ov);
        std::fprintf(stderr, "no subcommand given\n");
        return kExitConfig;
    } catch (const SubcriticalityViolated& e) {
        std::fprintf(stderr, "analysis error: %s\n", e.what());
        return kExitAnalysis;
    } catch (const HorizonExceeded& e) {
        std::fprintf(stderr, "analysis error: %s\n", e.what());
        return kExitAnalysis;
    } catch (const NonConvergence& e) {
        std::fprintf(stderr, "analysis error: %s\n", e.what());
        return kExitAnalysis;
    } catch (const NodeCapExceeded& e) {
        std::fprintf(stderr, "simulation cap: %s\n", e.what());
        return kExitSimulationCap;
    } catch (const RateCapExceeded& e) {
        std::fprintf(stderr, "simulation cap: %s\n", e.what());
        return kExitSimulationCap;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitConfig;
    }
}
