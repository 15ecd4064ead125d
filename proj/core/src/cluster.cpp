#include "hawkes/cluster.hpp"

#include <sstream>
#include <stdexcept>

#include "hawkes/errors.hpp"

namespace hawkes {

ClusterSample sample_cluster(const HawkesModel& model, int root_type, double t0,
                             Rng& rng, std::size_t max_nodes) {
    const std::size_t m = model.types();
    if (root_type < 0 || static_cast<std::size_t>(root_type) >= m)
        throw std::invalid_argument("root type out of range");
    if (max_nodes == 0) throw std::invalid_argument("max_nodes must be >= 1");
    const InteractionMatrix& h = model.interaction_matrix();

    ClusterSample out;
    Cluster& cl = out.cluster;
    cl.tree.nodes.push_back({-1, 0, root_type});
    cl.birth.push_back(0.0);  // relative dates; t0 added at the end

    std::size_t next = 0;
    while (next < cl.tree.nodes.size()) {
        const std::size_t u = next++;
        const int parent_type = cl.tree.nodes[u].type;
        const double parent_birth = cl.birth[u];
        int sibling = 0;
        for (std::size_t b = 0; b < m && !out.truncated; ++b) {
            const double mean = h(static_cast<std::size_t>(parent_type), b);
            if (mean <= 0.0) continue;
            const std::uint64_t count = rng.poisson(mean);
            const KernelSpec& kernel =
                model.kernel(static_cast<std::size_t>(parent_type), b);
            for (std::uint64_t c = 0; c < count; ++c) {
                if (cl.tree.nodes.size() >= max_nodes) {
                    out.truncated = true;
                    break;
                }
                cl.tree.nodes.push_back({static_cast<std::int64_t>(u), ++sibling,
                                         static_cast<int>(b)});
                cl.birth.push_back(parent_birth + kernel.sample_gap(rng));
            }
        }
        if (out.truncated) break;
    }
    for (double& bd : cl.birth) bd += t0;
    return out;
}

ClusterSample sample_cluster(const HawkesModel& model, int root_type, double t0,
                             std::uint64_t seed, std::size_t max_nodes) {
    Rng rng(seed);
    return sample_cluster(model, root_type, t0, rng, max_nodes);
}

std::size_t cluster_count(const Cluster& cluster, double a, double b) {
    if (!(a <= b)) throw std::invalid_argument("interval must satisfy a <= b");
    std::size_t n = 0;
    for (double bd : cluster.birth)
        if (bd >= a && bd < b) ++n;
    return n;
}

EventSequence simulate_window(const HawkesModel& model, double a, double b,
                              double burn_in, std::uint64_t seed,
                              const SimulationCaps& caps) {
    if (!(a < b)) throw std::invalid_argument("window must satisfy a < b");
    if (!(burn_in > 0.0)) throw std::invalid_argument("burn_in must be positive");

    Rng rng(seed);
    const std::size_t m = model.types();
    const double start = a - burn_in;

    // Immigrants per type via exponential gaps, then one cluster per immigrant
    // in arrival order. A single sequential RNG stream keeps the realization a
    // pure function of the seed.
    std::vector<std::pair<double, int>> immigrants;
    for (std::size_t t = 0; t < m; ++t) {
        const double rate = model.mu()[t];
        if (rate <= 0.0) continue;
        double x = start;
        for (;;) {
            x += rng.exponential(rate);
            if (x >= b) break;
            immigrants.emplace_back(x, static_cast<int>(t));
        }
    }

    std::vector<EventSequence::Event> pts;
    for (const auto& [t0, type] : immigrants) {
        ClusterSample cs = sample_cluster(model, type, t0, rng, caps.max_cluster_nodes);
        if (cs.truncated) {
            std::ostringstream msg;
            msg << "cluster rooted at t=" << t0 << " (type " << (type + 1)
                << ") hit the node cap " << caps.max_cluster_nodes;
            throw NodeCapExceeded(msg.str());
        }
        const Cluster& cl = cs.cluster;
        for (std::size_t i = 0; i < cl.size(); ++i) {
            const double bd = cl.birth[i];
            if (bd >= a && bd < b)
                pts.push_back({bd, cl.tree.nodes[i].type});
        }
    }
    return EventSequence::from_points(std::move(pts), a, b);
}

double burn_in_check(const HawkesModel& model, double a, double b, double burn_in,
                     std::size_t n_probe, std::uint64_t seed,
                     const SimulationCaps& caps) {
    if (!(a < b)) throw std::invalid_argument("window must satisfy a < b");
    if (!(burn_in > 0.0)) throw std::invalid_argument("burn_in must be positive");
    if (n_probe == 0) throw std::invalid_argument("n_probe must be >= 1");

    const double mu_total = model.mu_total();
    if (mu_total == 0.0) return 0.0;

    Rng rng(seed);
    const std::size_t m = model.types();
    double total = 0.0;
    for (std::size_t i = 0; i < n_probe; ++i) {
        // Immigrant type weighted by base rate, position uniform in the band.
        double pick = rng.uniform01() * mu_total;
        int type = static_cast<int>(m) - 1;
        for (std::size_t t = 0; t < m; ++t) {
            pick -= model.mu()[t];
            if (pick <= 0.0) {
                type = static_cast<int>(t);
                break;
            }
        }
        const double x = a - 2.0 * burn_in + burn_in * rng.uniform01();
        ClusterSample cs = sample_cluster(model, type, x, rng, caps.max_cluster_nodes);
        total += static_cast<double>(cluster_count(cs.cluster, a, b));
    }
    // Expected band contribution = (immigrant mass in band) * mean count.
    return (total / static_cast<double>(n_probe)) * mu_total * burn_in;
}

}  // namespace hawkes
