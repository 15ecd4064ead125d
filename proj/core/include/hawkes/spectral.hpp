#pragma once

#include <vector>

#include "hawkes/interaction_matrix.hpp"

namespace hawkes {

// A finitely checked witness that |||H^n|||_inf <= k * r^n for all n >= 1.
// The stored facts are |||H^n|||_inf <= k * r^n for n = 1..N together with the
// closure condition |||H^N|||_inf <= r^N; writing n = qN + s with 0 <= s < N,
// submultiplicativity gives |||H^n||| <= (|||H^N|||)^q * |||H^s||| <= k * r^n,
// so the finite check extends to every n.
struct GeCertificate {
    double r = 0.0;                    // geometric ratio, in (0,1)
    double k = 0.0;                    // prefactor, >= 0; k == 0 iff H == 0
    int proof_horizon = 0;             // N: smallest n with |||H^n|||_inf <= r^n
    std::vector<double> checked_norms; // |||H^n|||_inf for n = 1..N
};

// The closed-form constants attached to a certificate:
//   xi = log((1+r)/(2r)) / (1 + 2k/(1-r)),   c = 1 + 2k/(1-r).
// xi is the certified abscissa up to which exponential moments are bounded and
// c the multiplier in the log-MGF bound t -> t*c.
struct BoundConstants {
    double xi = 0.0;
    double c = 1.0;
    GeCertificate cert;
    // Set when k == 0 (zero interaction matrix): xi_{r,0} = log((1+r)/(2r))
    // grows without bound as r -> 0+, so no grid maximum is an optimum.
    bool xi_unbounded = false;
};

// Operator norm induced by the sup norm: max absolute row sum.
double operator_norm_inf(const InteractionMatrix& h);

struct SpectralRadiusOptions {
    double tol = 1e-10;
    int max_iterations = 100000;
};

// Spectral radius of a nonnegative matrix within `tol`, by a bracketing
// refinement of Gelfand's formula: repeated squaring gives the nonincreasing
// upper bounds |||H^n|||_inf^{1/n} (n = 2^j), while max_i ((H^n)_ii)^{1/n} is
// a lower bound that converges once n is a multiple of a cycle length of the
// dominant class; base powers H^l for l = 1..M cover all cycle lengths.
// Throws NonConvergence if the bracket fails to close within the cap.
double spectral_radius(const InteractionMatrix& h, const SpectralRadiusOptions& opts = {});
double spectral_radius(const InteractionMatrix& h, double tol);

// Finds the smallest N <= n_cap with |||H^N|||_inf <= r^N, then k as the max
// of |||H^n|||_inf / r^n over n = 1..N. Requires spr(H) <= r (for r strictly
// below spr no horizon can exist, since |||H^N||| >= spr^N); r = spr is
// admissible whenever the closure condition holds exactly, e.g. for constant
// row sums. Throws SubcriticalityViolated or HorizonExceeded.
GeCertificate ge_certificate(const InteractionMatrix& h, double r, int n_cap = 400);

BoundConstants bound_constants(const GeCertificate& cert);

struct OptimizeXiOptions {
    int grid = 256;   // log-spaced r values over [spr(H) or grid_floor, 1)
    int n_cap = 400;
    double grid_floor = 1e-6;  // lower edge when spr(H) is tiny or zero
};

// Scans certificates over an r grid and returns the constants maximizing xi.
// Deterministic for a fixed grid. The left edge is spr(H) itself (skipped if
// no horizon exists there), so exact certificates at r = spr are found.
BoundConstants optimize_xi(const InteractionMatrix& h, const OptimizeXiOptions& opts = {});

}  // namespace hawkes
