#pragma once

#include <array>

#include "loggas/potential.hpp"
#include "loggas/series.hpp"

namespace loggas {

// Edge signature of a reference one-cut model: (rho_lo, rho_hi), +1 soft,
// -1 hard.
struct EdgeSignature {
    int lo = +1;
    int hi = +1;

    static EdgeSignature parse(const std::string& s);
    std::string str() const {
        auto c = [](int r) { return r > 0 ? '+' : '-'; };
        return std::string{c(lo), c(hi)};
    }
    bool operator==(const EdgeSignature&) const = default;
};

// One-cut reference model on a segment: the exactly solvable potentials
// whose equilibrium measures are the semicircle, Marchenko-Pastur (both
// orientations) and arcsine laws.
struct ReferenceModel {
    EdgeSignature signature;
    Segment gamma;  // support [gamma_lo, gamma_hi]
};

// Potential of the reference model as a polynomial (degree <= 2).
AnalyticPotential reference_potential(const ReferenceModel& m);

// Normalization constant c_{gamma,rho} of the reference density
//   c/pi * (x-lo)^{rho_lo/2} (hi-x)^{rho_hi/2}.
real reference_density_constant(const ReferenceModel& m);

// Stieltjes transform of the reference equilibrium measure (order -1
// correlator), its order-0 correction, and the universal one-cut two-point
// function. Closed forms; branch continuous off the cut.
cplx reference_w1m1(const ReferenceModel& m, cplx x);
cplx reference_w1_0(const ReferenceModel& m, real beta, cplx x);
cplx reference_w2_0(const Segment& gamma, real beta, cplx x1, cplx x2);

// ln of the exactly solvable partition function for the standard reference
// segment (unit scale) at size N:  signature ++ is the Gaussian model on R,
// -+ / +- the linear model on a half line, -- the flat model on [-2,2].
real selberg_exact(const EdgeSignature& sig, int n, real beta);

// ln of the partition function of the reference model on an arbitrary
// segment (scale covariance in the segment length).
real selberg_exact_scaled(const ReferenceModel& m, int n, real beta);

// log Gamma2(x; b1, b2): functional-equation ladder into the asymptotic
// regime. Gamma2(1; b1, b2) = 1.
real barnes_gamma2(real x, real b1, real b2);

// -chi'(0; b1, b2), the additive constant of the large-x expansion of
// ln Gamma2; computed once per (b1,b2) by matching the ladder value.
real gamma2_asymptotic_constant(real b1, real b2);

// Coefficient record of the large-N expansion of ln selberg_exact:
//   c2 N^2 + c1l N lnN + c1 N + c0l lnN + c0 + sum_{k>=1} d_k N^{-k}.
struct SelbergAsymptotics {
    real n2 = 0.0;
    real n_log = 0.0;
    real n1 = 0.0;
    real log_coeff = 0.0;
    real constant = 0.0;
    std::array<real, 4> tail{};  // d_1..d_4
    AsymptoticSeries series;

    real eval(real n) const { return series.eval(n); }
};

SelbergAsymptotics selberg_asymptotic(const EdgeSignature& sig, real beta);

}  // namespace loggas
