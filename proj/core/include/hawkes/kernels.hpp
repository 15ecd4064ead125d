#pragma once

#include <string>

#include "hawkes/rng.hpp"

namespace hawkes {

enum class KernelFamily { null_kernel, exponential, uniform, pareto };

const char* to_string(KernelFamily family);

// A parametric interaction kernel h(t) = mass * density(t) on (0, inf).
// The mass is the L1 norm (expected child count); the normalized density is
// the birth-gap law. Every shipped family has a closed-form inverse CDF and a
// density that is nonincreasing on (0, inf), which the thinning simulator's
// majorant construction relies on.
//   exponential(mass, rate):   density rate * exp(-rate t)
//   uniform(mass, width):      density 1/width on (0, width)
//   pareto(mass, x_min, shape): Lomax form, density
//                              (shape/x_min) * (x_min/(x_min+t))^(shape+1);
//                              heavy tail t^-(shape+1), finite mass for shape > 1
class KernelSpec {
  public:
    static KernelSpec null();
    static KernelSpec exponential(double mass, double rate);
    static KernelSpec uniform(double mass, double width);
    static KernelSpec pareto(double mass, double x_min, double shape);

    KernelFamily family() const { return family_; }
    double l1_norm() const { return mass_; }

    // Normalized density at lag t >= 0; evaluate(0) is the t -> 0+ limit.
    double density(double t) const;

    // h(t) = mass * density(t).
    double evaluate(double t) const { return mass_ * density(t); }

    // Inverse-CDF draw from the normalized density; strictly positive.
    // Undefined for the null kernel (it has no sampler and mass 0).
    double sample_gap(Rng& rng) const;

    // Fraction of the density mass beyond `lag`: integral_lag^inf density.
    double tail_mass_fraction(double lag) const;

    // Family parameters in declaration order (rate / width / x_min, shape).
    double param1() const { return p1_; }
    double param2() const { return p2_; }

    std::string describe() const;

  private:
    KernelSpec(KernelFamily f, double mass, double p1, double p2);
    KernelFamily family_;
    double mass_;
    double p1_;
    double p2_;
};

}  // namespace hawkes
