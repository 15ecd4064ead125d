#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "hawkes/verify.hpp"

namespace hawkes {

namespace {

nlohmann::json kernel_to_json(const KernelSpec& k) {
    nlohmann::json j;
    j["family"] = to_string(k.family());
    j["mass"] = k.l1_norm();
    switch (k.family()) {
        case KernelFamily::exponential: j["rate"] = k.param1(); break;
        case KernelFamily::uniform: j["width"] = k.param1(); break;
        case KernelFamily::pareto:
            j["x_min"] = k.param1();
            j["shape"] = k.param2();
            break;
        default: break;
    }
    return j;
}

nlohmann::json model_to_json(const HawkesModel& model) {
    nlohmann::json j;
    j["m"] = model.types();
    j["mu"] = model.mu();
    j["spectral_radius"] = model.spectral_radius();
    nlohmann::json kernels = nlohmann::json::array();
    for (std::size_t a = 0; a < model.types(); ++a) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t b = 0; b < model.types(); ++b)
            row.push_back(kernel_to_json(model.kernel(a, b)));
        kernels.push_back(row);
    }
    j["kernels"] = kernels;
    return j;
}

}  // namespace

std::string report_to_json(const BoundReport& report) {
    nlohmann::json j;
    j["model"] = model_to_json(report.model);
    j["cert"] = {{"r", report.cert.r},
                 {"k", report.cert.k},
                 {"proof_horizon", report.cert.proof_horizon}};
    nlohmann::json grid = nlohmann::json::array();
    for (const auto& p : report.grid) {
        nlohmann::json g;
        g["u"] = p.u;
        g["xi"] = p.xi;
        g["bound"] = p.bound;
        g["mgf"] = {{"point", p.mgf.point}, {"ci_lo", p.mgf.ci_lo},
                    {"ci_hi", p.mgf.ci_hi}, {"n", p.mgf.n},
                    {"method", to_string(p.mgf.method)}};
        if (p.mgf.heavy_tail_warning) g["mgf"]["heavy_tail_warning"] = true;
        g["verdict"] = to_string(p.verdict);
        grid.push_back(g);
    }
    j["grid"] = grid;
    j["seed"] = report.seed;
    j["engine"] = to_string(report.engine);
    j["window"] = {{"a", report.window_a}, {"b", report.window_b}};
    j["burn_in"] = report.burn_in;
    j["burn_in_check_value"] = report.burn_in_check_value;
    j["n_reps"] = report.n_reps;
    j["mean_value"] = report.mean_value;
    j["se_value"] = report.se_value;
    if (report.functional) {
        j["functional"] = {{"breakpoints", report.functional->f.breakpoints()},
                           {"values", report.functional->f.values()},
                           {"period", report.functional->t_period},
                           {"fold_norm", report.functional->fold_norm}};
    }
    return j.dump(2);
}

void write_report_csv(const BoundReport& report, std::ostream& os) {
    os << "u,xi,bound,mgf_point,ci_lo,ci_hi,n,method,verdict\n";
    char buf[256];
    for (const auto& p : report.grid) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                      p.u, p.xi, p.bound, p.mgf.point, p.mgf.ci_lo, p.mgf.ci_hi);
        os << buf << ',' << p.mgf.n << ',' << to_string(p.mgf.method) << ','
           << to_string(p.verdict) << '\n';
    }
}

}  // namespace hawkes
