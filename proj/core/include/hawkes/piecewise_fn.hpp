#pragma once

#include <vector>

namespace hawkes {

// Nonnegative step function with compact support: value values[i] on
// [breakpoints[i], breakpoints[i+1]), zero outside [first, last). The empty
// function (no pieces) is the zero function.
class PiecewiseFn {
  public:
    PiecewiseFn() = default;  // zero function
    PiecewiseFn(std::vector<double> breakpoints, std::vector<double> values);

    static PiecewiseFn indicator(double lo, double hi) {
        return PiecewiseFn({lo, hi}, {1.0});
    }

    double value_at(double t) const;
    bool is_zero() const;
    double support_lo() const { return breakpoints_.empty() ? 0.0 : breakpoints_.front(); }
    double support_hi() const { return breakpoints_.empty() ? 0.0 : breakpoints_.back(); }
    double max_value() const;

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }

  private:
    std::vector<double> breakpoints_;  // strictly increasing; size = values + 1
    std::vector<double> values_;       // nonnegative
};

// The periodized sup norm sup_t sum_n f(t + n*T): fold every piece modulo T
// and take the exact maximum of the resulting step function. Finite because
// the support is compact; the supremum is attained on a folded subinterval.
double f_fold_norm(const PiecewiseFn& f, double t_period);

}  // namespace hawkes
