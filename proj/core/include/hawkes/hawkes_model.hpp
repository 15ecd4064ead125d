#pragma once

#include <cstddef>
#include <vector>

#include "hawkes/interaction_matrix.hpp"
#include "hawkes/kernels.hpp"

namespace hawkes {

// Full simulation spec: base rates mu plus the M x M kernel table indexed
// [source][target]. Construction enforces subcriticality (spectral radius of
// the kernel-mass matrix strictly below 1), which stationary simulation needs.
class HawkesModel {
  public:
    HawkesModel(std::vector<double> mu, std::vector<std::vector<KernelSpec>> kernels);

    std::size_t types() const { return mu_.size(); }
    const std::vector<double>& mu() const { return mu_; }
    double mu_total() const { return mu_total_; }
    const KernelSpec& kernel(std::size_t source, std::size_t target) const {
        return kernels_[source][target];
    }
    const InteractionMatrix& interaction_matrix() const { return h_; }
    double spectral_radius() const { return spr_; }

    // Homogeneous Poisson model: mu given, all kernels null.
    static HawkesModel poisson(std::vector<double> mu);

    // Every kernel exponential with unit rate and the masses of `h`.
    static HawkesModel exponential_kernels(std::vector<double> mu,
                                           const InteractionMatrix& h,
                                           double rate = 1.0);

  private:
    std::vector<double> mu_;
    std::vector<std::vector<KernelSpec>> kernels_;
    InteractionMatrix h_;
    double mu_total_ = 0.0;
    double spr_ = 0.0;
};

}  // namespace hawkes
