#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hawkes/interaction_matrix.hpp"
#include "hawkes/rng.hpp"
#include "hawkes/spectral.hpp"

namespace hawkes {

// A typed tree in Ulam-Harris labeling, stored flat in breadth-first order.
// The flat parent/sibling encoding guarantees the labeling invariants by
// construction: labels are prefix-closed and sibling indices at every node
// run 1..k without gaps.
struct TypedTree {
    struct Node {
        std::int64_t parent;  // index into nodes; -1 for the root
        int sibling_index;    // 1-based position among the parent's children
        int type;             // 0-based
    };
    std::vector<Node> nodes;  // root first

    std::size_t size() const { return nodes.size(); }

    // Materialized Ulam-Harris label (sequence of sibling indices; root = empty).
    std::vector<int> label_of(std::size_t i) const;

    // Checks prefix closure and gapless sibling indexing; throws on violation.
    void validate() const;
};

struct GwSampleResult {
    TypedTree tree;
    bool truncated = false;  // hit max_nodes; tree holds the partial sample
};

// Breadth-first sampling of a multitype Galton-Watson tree: the number of
// type-b children of a type-a node is Poisson(h(a,b)), independent across
// nodes and types. Node count never exceeds max_nodes; if the cap is hit the
// partial tree is returned with `truncated` set, for the caller to decide.
GwSampleResult sample_gw_tree(const InteractionMatrix& h, int root_type, Rng& rng,
                              std::size_t max_nodes = 1'000'000);
GwSampleResult sample_gw_tree(const InteractionMatrix& h, int root_type,
                              std::uint64_t seed, std::size_t max_nodes = 1'000'000);

// State of the clipped-generation log-MGF recursion
//   g_0^m(t) = t,   g_{n+1}^m(t) = t + sum_{m'} h(m,m') * (exp(g_n^{m'}(t)) - 1).
// g_n^m(t) is log E[exp(t * Z_n^m)] where Z_n^m is the size of a tree with
// type-m root clipped at generation n; nondecreasing in both n and t.
struct MgfRecursion {
    std::vector<double> g;            // per root type
    int generations = 0;              // n actually computed
    // Set when some component crossed the overflow guard: t lies beyond the
    // MGF's abscissa of convergence. A mathematical answer, not a failure.
    std::optional<int> diverged_at;

    bool diverged() const { return diverged_at.has_value(); }
};

double constexpr kMgfOverflowGuard = 700.0;

MgfRecursion gw_mgf_recursion(const InteractionMatrix& h, double t, int n_gens,
                              double overflow_guard = kMgfOverflowGuard);

struct MgfLimitOptions {
    double tol = 1e-12;        // sup-norm increment threshold
    int max_generations = 10000;
    double overflow_guard = kMgfOverflowGuard;
};

// Iterates the recursion to its limit (the smallest fixed point). Contraction
// holds for t below the certified abscissa, so this terminates in that regime.
MgfRecursion gw_mgf_limit(const InteractionMatrix& h, double t,
                          const MgfLimitOptions& opts = {});

// log E[exp(t * |tree|)] <= t * C_{r,K} for 0 <= t <= xi_{r,K}, any root type.
// Throws OutOfRange above the abscissa, where nothing is claimed.
double gw_mgf_bound(const GeCertificate& cert, double t);

// Borel distribution: total progeny of a Poisson(alpha) Galton-Watson tree,
//   P(|T| = n) = exp(-alpha*n) * (alpha*n)^(n-1) / n!,
// evaluated in log space. Independent oracle for the univariate sampler.
double borel_progeny_pmf(double alpha, std::uint64_t n);

// The exact univariate abscissa from the fixed-point equation
// x = xi + alpha*(e^x - 1): the MGF is finite iff a positive solution exists,
// and log E[exp(xi*|T|)] is the first positive solution. Tangency gives
//   x* = log(1/alpha),   xi_max = log(1/alpha) - (1 - alpha).
struct UnivariateXi {
    double alpha = 0.0;
    double xi_max = 0.0;
    double x_star = 0.0;

    // First positive root, by bisection on [xi, x_star] to 1e-12.
    // Throws OutOfRange for xi > xi_max (the MGF is infinite there).
    double log_mgf(double xi) const;
};

UnivariateXi univariate_optimal_xi(double alpha);

}  // namespace hawkes
