#include "hawkes/piecewise_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace hawkes {

PiecewiseFn::PiecewiseFn(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
    if (breakpoints_.empty() != values_.empty() ||
        (!breakpoints_.empty() && breakpoints_.size() != values_.size() + 1))
        throw std::invalid_argument("need one more breakpoint than values");
    for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
        if (!(breakpoints_[i] < breakpoints_[i + 1]))
            throw std::invalid_argument("breakpoints must be strictly increasing");
    for (double v : values_)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("values must be finite and nonnegative");
    for (double b : breakpoints_)
        if (!std::isfinite(b))
            throw std::invalid_argument("breakpoints must be finite");
}

double PiecewiseFn::value_at(double t) const {
    if (breakpoints_.empty() || t < breakpoints_.front() || t >= breakpoints_.back())
        return 0.0;
    const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return values_[static_cast<std::size_t>(it - breakpoints_.begin()) - 1];
}

bool PiecewiseFn::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return v == 0.0; });
}

double PiecewiseFn::max_value() const {
    double best = 0.0;
    for (double v : values_) best = std::max(best, v);
    return best;
}

double f_fold_norm(const PiecewiseFn& f, double t_period) {
    if (!(t_period > 0.0)) throw std::invalid_argument("period must be positive");
    if (f.is_zero()) return 0.0;

    // Each piece [s, e) of height v folds to v * floor(len/T) everywhere plus
    // a remainder interval of length len mod T starting at s mod T, possibly
    // wrapping once. Sweep the folded deltas for the exact maximum.
    auto fold_position = [&](double x) {
        double r = std::fmod(x, t_period);
        if (r < 0.0) r += t_period;
        return r;
    };

    double base = 0.0;
    std::map<double, double> delta;  // folded step deltas on [0, T)
    const auto& bp = f.breakpoints();
    const auto& vals = f.values();
    for (std::size_t i = 0; i < vals.size(); ++i) {
        const double v = vals[i];
        if (v == 0.0) continue;
        const double len = bp[i + 1] - bp[i];
        const double full = std::floor(len / t_period);
        base += v * full;
        const double rem = len - full * t_period;
        // Lengths within rounding of a period multiple are snapped: hairline
        // slivers are float noise, not intent.
        const double snap = 64.0 * std::numeric_limits<double>::epsilon() *
                            std::max({std::abs(bp[i]), std::abs(bp[i + 1]), t_period});
        if (rem <= snap) continue;
        if (rem >= t_period - snap) {
            base += v;
            continue;
        }
        // Both remainder endpoints are folded straight from the original
        // breakpoints, so adjacent pieces share exact delta keys and cannot
        // create ulp-wide phantom overlaps in the sweep. psi determines the
        // end only up to a whole period; whether the remainder wraps is
        // decided by its true width rem.
        const double phi = fold_position(bp[i]);
        const double psi = fold_position(bp[i + 1]);
        if (std::abs((psi - phi) - rem) <= std::abs((psi - phi + t_period) - rem)) {
            delta[phi] += v;  // direct interval [phi, psi)
            delta[psi] -= v;
        } else {  // wraps across the period boundary
            delta[phi] += v;
            delta[t_period] -= v;
            if (psi > 0.0) {
                delta[0.0] += v;
                delta[psi] -= v;
            }
        }
    }

    double best = base;
    double level = base;
    for (const auto& [pos, dv] : delta) {
        level += dv;
        best = std::max(best, level);
    }
    return best;
}

}  // namespace hawkes
