#include "config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hawkes::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.count(key))
            throw std::invalid_argument("unknown config field `" + key + "` in " + where);
    }
}

KernelSpec parse_kernel(const json& j, const std::string& where) {
    if (!j.is_object())
        throw std::invalid_argument("kernel entry must be an object in " + where);
    const std::string family = j.value("family", "");
    if (family == "null") {
        reject_unknown(j, {"family", "mass"}, where);
        if (j.value("mass", 0.0) != 0.0)
            throw std::invalid_argument("null kernel cannot carry mass in " + where);
        return KernelSpec::null();
    }
    if (family == "exponential") {
        reject_unknown(j, {"family", "mass", "rate"}, where);
        return KernelSpec::exponential(j.at("mass").get<double>(),
                                       j.at("rate").get<double>());
    }
    if (family == "uniform") {
        reject_unknown(j, {"family", "mass", "width"}, where);
        return KernelSpec::uniform(j.at("mass").get<double>(),
                                   j.at("width").get<double>());
    }
    if (family == "pareto") {
        reject_unknown(j, {"family", "mass", "x_min", "shape"}, where);
        return KernelSpec::pareto(j.at("mass").get<double>(),
                                  j.at("x_min").get<double>(),
                                  j.at("shape").get<double>());
    }
    throw std::invalid_argument("unknown kernel family `" + family + "` in " + where);
}

}  // namespace

InteractionMatrix ExperimentConfig::interaction_matrix() const {
    InteractionMatrix h(mu.size());
    for (std::size_t a = 0; a < kernels.size(); ++a)
        for (std::size_t b = 0; b < kernels[a].size(); ++b)
            h(a, b) = kernels[a][b].l1_norm();
    return h;
}

HawkesModel ExperimentConfig::build_model() const { return HawkesModel(mu, kernels); }

GeCertificate ExperimentConfig::resolve_certificate(const InteractionMatrix& h) const {
    if (cert_optimize) {
        OptimizeXiOptions opts;
        opts.grid = cert_grid;
        opts.n_cap = cert_n_cap;
        return optimize_xi(h, opts).cert;
    }
    return ge_certificate(h, cert_r, cert_n_cap);
}

VerificationOptions ExperimentConfig::verification_options() const {
    VerificationOptions opts;
    opts.ci_level = ci_level;
    opts.burn_in_epsilon_fraction = burn_in_epsilon_fraction;
    opts.max_burn_in_doublings = burn_in_auto ? burn_in_max_doublings : 0;
    opts.threads = threads;
    opts.caps = caps;
    return opts;
}

ExperimentConfig parse_config(const std::string& json_text) {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw std::invalid_argument("config root must be an object");
    reject_unknown(j,
                   {"model", "window", "burn_in", "n_reps", "u_grid", "xi_grid",
                    "f", "seed", "engine", "threads", "certificate", "caps",
                    "ci_level", "output", "gw"},
                   "config root");

    ExperimentConfig cfg;

    const json& model = j.at("model");
    reject_unknown(model, {"mu", "kernels"}, "model");
    cfg.mu = model.at("mu").get<std::vector<double>>();
    const json& table = model.at("kernels");
    if (!table.is_array() || table.size() != cfg.mu.size())
        throw std::invalid_argument("model.kernels must be an MxM array");
    for (std::size_t a = 0; a < table.size(); ++a) {
        const json& row = table[a];
        if (!row.is_array() || row.size() != cfg.mu.size())
            throw std::invalid_argument("model.kernels must be an MxM array");
        std::vector<KernelSpec> parsed;
        for (std::size_t b = 0; b < row.size(); ++b) {
            std::ostringstream where;
            where << "model.kernels[" << a << "][" << b << "]";
            parsed.push_back(parse_kernel(row[b], where.str()));
        }
        cfg.kernels.push_back(std::move(parsed));
    }

    if (j.contains("window")) {
        const json& w = j.at("window");
        reject_unknown(w, {"a", "b"}, "window");
        cfg.window_a = w.at("a").get<double>();
        cfg.window_b = w.at("b").get<double>();
        if (!(cfg.window_a < cfg.window_b))
            throw std::invalid_argument("window must satisfy a < b");
    }

    if (j.contains("burn_in")) {
        const json& b = j.at("burn_in");
        if (b.is_number()) {
            cfg.burn_in_initial = b.get<double>();
        } else {
            reject_unknown(b, {"initial", "auto", "epsilon_fraction", "max_doublings"},
                           "burn_in");
            cfg.burn_in_initial = b.value("initial", cfg.burn_in_initial);
            cfg.burn_in_auto = b.value("auto", cfg.burn_in_auto);
            cfg.burn_in_epsilon_fraction =
                b.value("epsilon_fraction", cfg.burn_in_epsilon_fraction);
            cfg.burn_in_max_doublings = b.value("max_doublings", cfg.burn_in_max_doublings);
        }
        if (!(cfg.burn_in_initial > 0.0))
            throw std::invalid_argument("burn_in must be positive");
    }

    if (j.contains("n_reps")) cfg.n_reps = j.at("n_reps").get<std::size_t>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads")) cfg.threads = j.at("threads").get<int>();
    if (j.contains("ci_level")) {
        cfg.ci_level = j.at("ci_level").get<double>();
        if (!(cfg.ci_level > 0.0 && cfg.ci_level < 1.0))
            throw std::invalid_argument("ci_level must lie in (0,1)");
    }

    if (j.contains("engine")) {
        const std::string e = j.at("engine").get<std::string>();
        if (e == "cluster") cfg.engine = Engine::cluster;
        else if (e == "thinning") cfg.engine = Engine::thinning;
        else throw std::invalid_argument("engine must be `cluster` or `thinning`");
    }

    if (j.contains("u_grid") && j.contains("xi_grid"))
        throw std::invalid_argument("provide u_grid or xi_grid, not both");
    if (j.contains("u_grid")) {
        cfg.u_grid = j.at("u_grid").get<std::vector<double>>();
        for (double u : cfg.u_grid)
            if (!(u >= 0.0 && u <= 1.0))
                throw std::invalid_argument("u_grid entries must lie in [0,1]");
    }
    if (j.contains("xi_grid")) {
        cfg.xi_grid = j.at("xi_grid").get<std::vector<double>>();
        for (double x : *cfg.xi_grid)
            if (!(x >= 0.0))
                throw std::invalid_argument("xi_grid entries must be nonnegative");
    }

    if (j.contains("f")) {
        const json& f = j.at("f");
        reject_unknown(f, {"breakpoints", "values", "period"}, "f");
        cfg.f = PiecewiseFn(f.at("breakpoints").get<std::vector<double>>(),
                            f.at("values").get<std::vector<double>>());
        cfg.f_period = f.at("period").get<double>();
        if (!(cfg.f_period > 0.0))
            throw std::invalid_argument("f.period must be positive");
    }

    if (j.contains("certificate")) {
        const json& c = j.at("certificate");
        reject_unknown(c, {"policy", "r", "n_cap", "grid"}, "certificate");
        const std::string policy = c.value("policy", "optimize");
        if (policy == "fixed") {
            cfg.cert_optimize = false;
            cfg.cert_r = c.at("r").get<double>();
        } else if (policy == "optimize") {
            cfg.cert_optimize = true;
        } else {
            throw std::invalid_argument("certificate.policy must be `fixed` or `optimize`");
        }
        cfg.cert_n_cap = c.value("n_cap", cfg.cert_n_cap);
        cfg.cert_grid = c.value("grid", cfg.cert_grid);
    }

    if (j.contains("caps")) {
        const json& c = j.at("caps");
        reject_unknown(c, {"max_cluster_nodes", "rate_ceiling"}, "caps");
        cfg.caps.max_cluster_nodes =
            c.value("max_cluster_nodes", cfg.caps.max_cluster_nodes);
        cfg.caps.rate_ceiling = c.value("rate_ceiling", cfg.caps.rate_ceiling);
    }

    if (j.contains("output")) {
        const json& o = j.at("output");
        reject_unknown(o, {"dir", "svg"}, "output");
        cfg.out_dir = o.value("dir", cfg.out_dir);
        cfg.svg = o.value("svg", cfg.svg);
    }

    if (j.contains("gw")) {
        const json& g = j.at("gw");
        reject_unknown(g, {"root_type", "t", "generations", "n_samples"}, "gw");
        cfg.gw_root_type = g.value("root_type", cfg.gw_root_type);
        cfg.gw_t = g.value("t", cfg.gw_t);
        cfg.gw_generations = g.value("generations", cfg.gw_generations);
        cfg.gw_samples = g.value("n_samples", cfg.gw_samples);
        if (cfg.gw_root_type < 1 || static_cast<std::size_t>(cfg.gw_root_type) > cfg.mu.size())
            throw std::invalid_argument("gw.root_type must lie in [1, M]");
    }

    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace hawkes::cli
