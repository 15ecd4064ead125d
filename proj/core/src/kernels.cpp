#include "hawkes/kernels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hawkes {

const char* to_string(KernelFamily family) {
    switch (family) {
        case KernelFamily::null_kernel: return "null";
        case KernelFamily::exponential: return "exponential";
        case KernelFamily::uniform: return "uniform";
        case KernelFamily::pareto: return "pareto";
    }
    return "?";
}

KernelSpec::KernelSpec(KernelFamily f, double mass, double p1, double p2)
    : family_(f), mass_(mass), p1_(p1), p2_(p2) {
    if (!(mass >= 0.0) || !std::isfinite(mass))
        throw std::invalid_argument("kernel mass must be finite and nonnegative");
}

KernelSpec KernelSpec::null() { return KernelSpec(KernelFamily::null_kernel, 0.0, 0.0, 0.0); }

KernelSpec KernelSpec::exponential(double mass, double rate) {
    if (!(rate > 0.0)) throw std::invalid_argument("exponential rate must be positive");
    return KernelSpec(KernelFamily::exponential, mass, rate, 0.0);
}

KernelSpec KernelSpec::uniform(double mass, double width) {
    if (!(width > 0.0)) throw std::invalid_argument("uniform width must be positive");
    return KernelSpec(KernelFamily::uniform, mass, width, 0.0);
}

KernelSpec KernelSpec::pareto(double mass, double x_min, double shape) {
    if (!(x_min > 0.0)) throw std::invalid_argument("pareto scale must be positive");
    if (!(shape > 1.0))
        throw std::invalid_argument("pareto shape must exceed 1 (finite mean gap)");
    return KernelSpec(KernelFamily::pareto, mass, x_min, shape);
}

double KernelSpec::density(double t) const {
    if (t < 0.0) return 0.0;
    switch (family_) {
        case KernelFamily::null_kernel:
            return 0.0;
        case KernelFamily::exponential:
            return p1_ * std::exp(-p1_ * t);
        case KernelFamily::uniform:
            return t < p1_ ? 1.0 / p1_ : 0.0;
        case KernelFamily::pareto: {
            const double base = p1_ / (p1_ + t);
            return (p2_ / p1_) * std::pow(base, p2_ + 1.0);
        }
    }
    return 0.0;
}

double KernelSpec::sample_gap(Rng& rng) const {
    const double u = rng.uniform01();  // in (0,1): draws stay strictly positive
    switch (family_) {
        case KernelFamily::null_kernel:
            throw std::logic_error("null kernel has no gap sampler");
        case KernelFamily::exponential:
            return -std::log(u) / p1_;
        case KernelFamily::uniform:
            return u * p1_;
        case KernelFamily::pareto:
            return p1_ * (std::pow(u, -1.0 / p2_) - 1.0);
    }
    throw std::logic_error("unreachable");
}

double KernelSpec::tail_mass_fraction(double lag) const {
    if (lag <= 0.0) return family_ == KernelFamily::null_kernel ? 0.0 : 1.0;
    switch (family_) {
        case KernelFamily::null_kernel:
            return 0.0;
        case KernelFamily::exponential:
            return std::exp(-p1_ * lag);
        case KernelFamily::uniform:
            return lag < p1_ ? (p1_ - lag) / p1_ : 0.0;
        case KernelFamily::pareto:
            return std::pow(p1_ / (p1_ + lag), p2_);
    }
    return 0.0;
}

std::string KernelSpec::describe() const {
    std::ostringstream os;
    os << to_string(family_) << "(mass=" << mass_;
    switch (family_) {
        case KernelFamily::exponential: os << ", rate=" << p1_; break;
        case KernelFamily::uniform: os << ", width=" << p1_; break;
        case KernelFamily::pareto: os << ", x_min=" << p1_ << ", shape=" << p2_; break;
        default: break;
    }
    os << ")";
    return os.str();
}

}  // namespace hawkes
