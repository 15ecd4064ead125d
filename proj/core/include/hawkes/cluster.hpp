#pragma once

#include <cstdint>
#include <vector>

#include "hawkes/event_sequence.hpp"
#include "hawkes/gw_tree.hpp"
#include "hawkes/hawkes_model.hpp"
#include "hawkes/rng.hpp"

namespace hawkes {

// A dated Galton-Watson tree: the skeleton plus one birth date per node.
// Birth gaps are strictly positive (kernel densities live on (0, inf)), so
// every child is born strictly after its parent.
struct Cluster {
    TypedTree tree;
    std::vector<double> birth;  // birth[i] dates tree.nodes[i]; birth[0] = t0

    std::size_t size() const { return tree.size(); }
};

struct ClusterSample {
    Cluster cluster;
    bool truncated = false;
};

struct SimulationCaps {
    std::size_t max_cluster_nodes = 1'000'000;
    double rate_ceiling = 1e9;  // thinning only
};

// One BFS pass draws offspring counts and birth-date increments together. The
// skeleton law matches sample_gw_tree on the model's interaction matrix; the
// increment from a type-a parent to a type-b child follows the normalized
// kernel(a,b) density. Relative dates are accumulated from 0 and t0 is added
// last, so a t0 shift changes every birth by exactly the same float amount.
ClusterSample sample_cluster(const HawkesModel& model, int root_type, double t0,
                             Rng& rng, std::size_t max_nodes = 1'000'000);
ClusterSample sample_cluster(const HawkesModel& model, int root_type, double t0,
                             std::uint64_t seed, std::size_t max_nodes = 1'000'000);

// Number of birth dates in [a, b), all types.
std::size_t cluster_count(const Cluster& cluster, double a, double b);

// Stationary-window realization via the cluster representation: immigrants
// arrive as independent Poisson processes of rate mu_m on [a - burn_in, b),
// each roots an independent cluster, and points landing in [a, b) are kept.
// Truncating immigrants older than a - burn_in biases counts downward only;
// burn_in_check quantifies the deficit. Throws NodeCapExceeded if any cluster
// hits the cap.
EventSequence simulate_window(const HawkesModel& model, double a, double b,
                              double burn_in, std::uint64_t seed,
                              const SimulationCaps& caps = {});

// Estimates the expected number of points contributed to [a, b) by immigrants
// in the band [a - 2*burn_in, a - burn_in), by direct simulation of n_probe
// immigrant clusters. A proxy bound on the truncation bias: callers double
// burn_in until this drops below their tolerance.
double burn_in_check(const HawkesModel& model, double a, double b, double burn_in,
                     std::size_t n_probe, std::uint64_t seed,
                     const SimulationCaps& caps = {});

}  // namespace hawkes
