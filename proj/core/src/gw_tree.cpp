#include "hawkes/gw_tree.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hawkes/errors.hpp"

namespace hawkes {

std::vector<int> TypedTree::label_of(std::size_t i) const {
    std::vector<int> label;
    std::int64_t cur = static_cast<std::int64_t>(i);
    while (cur >= 0) {
        const Node& n = nodes[static_cast<std::size_t>(cur)];
        if (n.parent >= 0) label.push_back(n.sibling_index);
        cur = n.parent;
    }
    std::reverse(label.begin(), label.end());
    return label;
}

void TypedTree::validate() const {
    if (nodes.empty()) throw std::invalid_argument("tree must contain a root");
    if (nodes[0].parent != -1 || nodes[0].sibling_index != 0)
        throw std::invalid_argument("first node must be the root");
    std::vector<int> child_count(nodes.size(), 0);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        const Node& n = nodes[i];
        if (n.parent < 0 || static_cast<std::size_t>(n.parent) >= i)
            throw std::invalid_argument("nodes must follow their parent (BFS order)");
        // Sibling indices must arrive as 1,2,...,k per parent.
        if (n.sibling_index != ++child_count[static_cast<std::size_t>(n.parent)])
            throw std::invalid_argument("sibling indices must be gapless");
    }
}

GwSampleResult sample_gw_tree(const InteractionMatrix& h, int root_type, Rng& rng,
                              std::size_t max_nodes) {
    const std::size_t m = h.size();
    if (root_type < 0 || static_cast<std::size_t>(root_type) >= m)
        throw std::invalid_argument("root type out of range");
    if (max_nodes == 0) throw std::invalid_argument("max_nodes must be >= 1");

    GwSampleResult out;
    out.tree.nodes.push_back({-1, 0, root_type});
    std::size_t next = 0;  // BFS frontier: nodes not yet expanded
    while (next < out.tree.nodes.size()) {
        const std::size_t u = next++;
        const int parent_type = out.tree.nodes[u].type;
        int sibling = 0;
        for (std::size_t b = 0; b < m && !out.truncated; ++b) {
            const double mean = h(static_cast<std::size_t>(parent_type), b);
            std::uint64_t count = mean > 0.0 ? rng.poisson(mean) : 0;
            for (std::uint64_t c = 0; c < count; ++c) {
                if (out.tree.nodes.size() >= max_nodes) {
                    out.truncated = true;
                    break;
                }
                out.tree.nodes.push_back({static_cast<std::int64_t>(u), ++sibling,
                                          static_cast<int>(b)});
            }
        }
        if (out.truncated) break;
    }
    return out;
}

GwSampleResult sample_gw_tree(const InteractionMatrix& h, int root_type,
                              std::uint64_t seed, std::size_t max_nodes) {
    Rng rng(seed);
    return sample_gw_tree(h, root_type, rng, max_nodes);
}

MgfRecursion gw_mgf_recursion(const InteractionMatrix& h, double t, int n_gens,
                              double overflow_guard) {
    h.validate();
    if (!(t >= 0.0)) throw std::invalid_argument("t must be nonnegative");
    if (n_gens < 0) throw std::invalid_argument("generation count must be >= 0");

    const std::size_t m = h.size();
    MgfRecursion out;
    out.g.assign(m, t);
    for (int n = 0; n < n_gens; ++n) {
        std::vector<double> next(m, t);
        for (std::size_t i = 0; i < m; ++i) {
            double acc = t;
            for (std::size_t j = 0; j < m; ++j) {
                const double hij = h(i, j);
                if (hij > 0.0) acc += hij * std::expm1(out.g[j]);
            }
            next[i] = acc;
        }
        for (double v : next) {
            if (v > overflow_guard) {
                out.diverged_at = n + 1;
                return out;  // g holds the last pre-guard iterate
            }
        }
        out.g = std::move(next);
        out.generations = n + 1;
    }
    return out;
}

MgfRecursion gw_mgf_limit(const InteractionMatrix& h, double t,
                          const MgfLimitOptions& opts) {
    h.validate();
    if (!(t >= 0.0)) throw std::invalid_argument("t must be nonnegative");

    const std::size_t m = h.size();
    MgfRecursion out;
    out.g.assign(m, t);
    for (int n = 0; n < opts.max_generations; ++n) {
        double delta = 0.0;
        std::vector<double> next(m);
        for (std::size_t i = 0; i < m; ++i) {
            double acc = t;
            for (std::size_t j = 0; j < m; ++j) {
                const double hij = h(i, j);
                if (hij > 0.0) acc += hij * std::expm1(out.g[j]);
            }
            next[i] = acc;
            delta = std::max(delta, acc - out.g[i]);
        }
        for (double v : next) {
            if (v > opts.overflow_guard) {
                out.diverged_at = n + 1;
                return out;
            }
        }
        out.g = std::move(next);
        out.generations = n + 1;
        if (delta < opts.tol) return out;
    }
    // No divergence and no contraction within the cap: t sits essentially at
    // the abscissa. Report the last iterate; callers see `generations` at cap.
    return out;
}

double gw_mgf_bound(const GeCertificate& cert, double t) {
    if (!(t >= 0.0)) throw std::invalid_argument("t must be nonnegative");
    const BoundConstants bc = bound_constants(cert);
    if (t > bc.xi) {
        std::ostringstream msg;
        msg << "t=" << t << " exceeds the certified abscissa xi=" << bc.xi
            << "; the bound is not claimed there";
        throw OutOfRange(msg.str());
    }
    return t * bc.c;
}

double borel_progeny_pmf(double alpha, std::uint64_t n) {
    if (!(alpha >= 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in [0,1)");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (alpha == 0.0) return n == 1 ? 1.0 : 0.0;
    const double nd = static_cast<double>(n);
    const double log_pmf =
        -alpha * nd + (nd - 1.0) * std::log(alpha * nd) - std::lgamma(nd + 1.0);
    return std::exp(log_pmf);
}

double UnivariateXi::log_mgf(double xi) const {
    if (!(xi >= 0.0)) throw std::invalid_argument("xi must be nonnegative");
    if (xi > xi_max) {
        std::ostringstream msg;
        msg << "xi=" << xi << " exceeds xi_max=" << xi_max
            << ": the fixed-point equation has no positive solution";
        throw OutOfRange(msg.str());
    }
    if (xi == 0.0) return 0.0;

    // f(x) = xi + alpha*(e^x - 1) - x; f(xi) > 0 and f(x_star) <= 0, so the
    // first positive root lies in (xi, x_star].
    auto f = [&](double x) { return xi + alpha * std::expm1(x) - x; };
    double lo = xi;
    double hi = x_star;
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

UnivariateXi univariate_optimal_xi(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0,1)");
    UnivariateXi out;
    out.alpha = alpha;
    out.x_star = std::log(1.0 / alpha);
    out.xi_max = out.x_star - (1.0 - alpha);
    return out;
}

}  // namespace hawkes
