#include "hawkes/hawkes_model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hawkes/errors.hpp"
#include "hawkes/spectral.hpp"

namespace hawkes {

HawkesModel::HawkesModel(std::vector<double> mu,
                         std::vector<std::vector<KernelSpec>> kernels)
    : mu_(std::move(mu)), kernels_(std::move(kernels)), h_(std::max<std::size_t>(mu_.size(), 1)) {
    const std::size_t m = mu_.size();
    if (m == 0) throw std::invalid_argument("model needs at least one type");
    if (kernels_.size() != m)
        throw std::invalid_argument("kernel table must have one row per type");
    for (const auto& row : kernels_)
        if (row.size() != m)
            throw std::invalid_argument("kernel table must be square");
    for (double r : mu_) {
        if (!(r >= 0.0) || !std::isfinite(r))
            throw std::invalid_argument("base rates must be finite and nonnegative");
        mu_total_ += r;
    }
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) h_(a, b) = kernels_[a][b].l1_norm();

    spr_ = hawkes::spectral_radius(h_);
    if (spr_ >= 1.0) {
        std::ostringstream msg;
        msg << "model is not subcritical: spectral radius of the interaction "
               "matrix is " << spr_;
        throw SubcriticalityViolated(spr_, msg.str());
    }
}

HawkesModel HawkesModel::poisson(std::vector<double> mu) {
    const std::size_t m = mu.size();
    std::vector<std::vector<KernelSpec>> kernels(
        m, std::vector<KernelSpec>(m, KernelSpec::null()));
    return HawkesModel(std::move(mu), std::move(kernels));
}

HawkesModel HawkesModel::exponential_kernels(std::vector<double> mu,
                                             const InteractionMatrix& h,
                                             double rate) {
    const std::size_t m = h.size();
    std::vector<std::vector<KernelSpec>> kernels(
        m, std::vector<KernelSpec>(m, KernelSpec::null()));
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (h(a, b) > 0.0) kernels[a][b] = KernelSpec::exponential(h(a, b), rate);
    return HawkesModel(std::move(mu), std::move(kernels));
}

}  // namespace hawkes
