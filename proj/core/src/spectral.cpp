#include "hawkes/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "hawkes/errors.hpp"

namespace hawkes {

double operator_norm_inf(const InteractionMatrix& h) {
    h.validate();
    return h.max_row_sum();  // entries are nonnegative
}

namespace {

// One normalized squaring stream starting from `base` ~ H^base_power.
// Each step squares the running matrix and reports
//   upper = |||H^n|||^{1/n}  and  lower = max_i ((H^n)_ii)^{1/n},
// both exact in log scale. Returns early once the caller's bracket closes.
struct SquaringStream {
    InteractionMatrix p;
    double log_scale;    // log of the factored-out normalization
    double power;        // current n as a double (reaches 2^50 * base_power)
    bool dead = false;   // matrix power vanished: H^n == 0 exactly

    SquaringStream(const InteractionMatrix& base, double base_power)
        : p(base), log_scale(0.0), power(base_power) {
        normalize();
    }

    void normalize() {
        const double nu = p.max_row_sum();
        if (nu == 0.0) {
            dead = true;
            return;
        }
        p.scale(1.0 / nu);
        log_scale += std::log(nu);
    }

    void step() {
        if (dead) return;
        p = p.multiply(p);
        log_scale *= 2.0;
        power *= 2.0;
        normalize();
    }

    double upper() const {
        if (dead) return 0.0;
        return std::exp((log_scale + std::log(p.max_row_sum())) / power);
    }

    double lower() const {
        if (dead) return 0.0;
        const double d = p.max_diagonal();
        if (d <= 0.0) return 0.0;
        return std::exp((log_scale + std::log(d)) / power);
    }
};

InteractionMatrix matrix_power(const InteractionMatrix& h, int n) {
    InteractionMatrix out = h;
    for (int i = 1; i < n; ++i) out = out.multiply(h);
    return out;
}

}  // namespace

double spectral_radius(const InteractionMatrix& h, const SpectralRadiusOptions& opts) {
    h.validate();
    if (!(opts.tol > 0.0)) throw std::invalid_argument("tol must be positive");
    const std::size_t m = h.size();
    if (m == 1) return h(0, 0);
    if (h.is_zero()) return 0.0;

    double lower = h.max_diagonal();
    double upper = h.max_row_sum();
    int iterations = 0;

    constexpr int kMaxSquarings = 52;  // n = 2^52: Gelfand error ~ log(K)/n

    // Base power l = 1 first; escalate to l = 2..M only if a periodic
    // dominant class keeps the diagonal bound at zero.
    for (std::size_t l = 1; l <= m; ++l) {
        SquaringStream stream(l == 1 ? h : matrix_power(h, static_cast<int>(l)),
                              static_cast<double>(l));
        if (l > 1) lower = std::max(lower, stream.lower());
        for (int j = 0; j < kMaxSquarings; ++j) {
            if (++iterations > opts.max_iterations)
                throw NonConvergence("spectral radius bracket exceeded iteration cap");
            stream.step();
            if (stream.dead) return 0.0;  // nilpotent: H^n vanished exactly
            upper = std::min(upper, stream.upper());
            lower = std::max(lower, stream.lower());
            if (upper - lower <= opts.tol)
                return 0.5 * (upper + lower);
        }
        if (upper <= opts.tol && lower == 0.0) return 0.5 * upper;
    }
    throw NonConvergence("spectral radius bracket failed to tighten below tol");
}

double spectral_radius(const InteractionMatrix& h, double tol) {
    SpectralRadiusOptions opts;
    opts.tol = tol;
    return spectral_radius(h, opts);
}

GeCertificate ge_certificate(const InteractionMatrix& h, double r, int n_cap) {
    h.validate();
    if (!(r > 0.0 && r < 1.0)) throw std::invalid_argument("r must lie in (0,1)");
    if (n_cap < 1) throw std::invalid_argument("n_cap must be >= 1");

    const double spr = spectral_radius(h);
    if (spr > r + 1e-9) {
        std::ostringstream msg;
        msg << "no geometric certificate at ratio r=" << r
            << ": spectral radius " << spr << " exceeds it";
        throw SubcriticalityViolated(spr, msg.str());
    }

    // |||H^n|||_inf == ||H^n 1||_inf for nonnegative H; iterate v <- H v.
    GeCertificate cert;
    cert.r = r;
    std::vector<double> v(h.size(), 1.0);
    double rn = 1.0;
    double k = 0.0;
    for (int n = 1; n <= n_cap; ++n) {
        v = h.apply(v);
        rn *= r;
        const double norm_n = *std::max_element(v.begin(), v.end());
        cert.checked_norms.push_back(norm_n);
        k = std::max(k, norm_n / rn);
        if (norm_n <= rn) {
            cert.proof_horizon = n;
            cert.k = k;
            return cert;
        }
    }
    std::ostringstream msg;
    msg << "no horizon N <= " << n_cap << " with |||H^N||| <= r^N at r=" << r
        << "; raise r or n_cap";
    throw HorizonExceeded(msg.str());
}

BoundConstants bound_constants(const GeCertificate& cert) {
    if (!(cert.r > 0.0 && cert.r < 1.0))
        throw std::invalid_argument("certificate ratio must lie in (0,1)");
    if (!(cert.k >= 0.0))
        throw std::invalid_argument("certificate prefactor must be nonnegative");
    BoundConstants out;
    out.cert = cert;
    out.c = 1.0 + 2.0 * cert.k / (1.0 - cert.r);
    out.xi = std::log((1.0 + cert.r) / (2.0 * cert.r)) / out.c;
    out.xi_unbounded = (cert.k == 0.0);
    return out;
}

BoundConstants optimize_xi(const InteractionMatrix& h, const OptimizeXiOptions& opts) {
    h.validate();
    if (opts.grid < 2) throw std::invalid_argument("grid must have >= 2 points");

    const double spr = spectral_radius(h);
    if (spr >= 1.0) {
        std::ostringstream msg;
        msg << "interaction matrix is not subcritical: spectral radius " << spr;
        throw SubcriticalityViolated(spr, msg.str());
    }

    const double lo = std::max(spr, opts.grid_floor);
    const double hi = 1.0 - 1e-9;
    const double log_lo = std::log(lo);
    const double log_hi = std::log(hi);

    std::vector<double> candidates;
    candidates.reserve(static_cast<std::size_t>(opts.grid) + 4);
    for (int i = 0; i < opts.grid; ++i) {
        const double f = static_cast<double>(i) / (opts.grid - 1);
        candidates.push_back(std::exp(log_lo + f * (log_hi - log_lo)));
    }
    // The max row sum is the canonical horizon-1 ratio (K = 1 there) and is
    // exact in floating point, unlike the bracketed spectral radius; matrices
    // with constant row sums certify exactly at it. Probe just above the
    // bracketed radius as well.
    const double norm = h.max_row_sum();
    if (norm > 0.0 && norm < 1.0) candidates.push_back(norm);
    candidates.push_back(spr + 1e-9);
    candidates.push_back(spr * (1.0 + 1e-6));

    bool found = false;
    BoundConstants best;
    for (double r : candidates) {
        if (!(r > 0.0 && r < 1.0)) continue;
        GeCertificate cert;
        try {
            cert = ge_certificate(h, r, opts.n_cap);
        } catch (const HorizonExceeded&) {
            continue;  // no horizon at this ratio (possible near r == spr)
        }
        const BoundConstants cand = bound_constants(cert);
        if (!found || cand.xi > best.xi) {
            best = cand;
            found = true;
        }
    }
    if (!found)
        throw HorizonExceeded("no grid point admitted a certificate; raise n_cap");
    return best;
}

}  // namespace hawkes
