#pragma once

#include <functional>
#include <vector>

#include "loggas/common.hpp"

namespace loggas {

struct QuadRule {
    std::vector<real> x;
    std::vector<real> w;
    std::size_t size() const { return x.size(); }
};

// Edge exponent pair for a cut: +1 soft (sqrt vanishing), -1 hard
// (inverse-sqrt divergence). Quadrature below integrates against
//   (x-lo)^{rho_lo/2} (hi-x)^{rho_hi/2} dx
// using the theta-substitution x = mid + halfwidth*cos(theta), which turns
// all four sign combinations into smooth periodic integrands (midpoint rule
// is then spectrally accurate).
QuadRule jacobi_half_rule(real lo, real hi, int rho_lo, int rho_hi, int n);

// Gauss-Legendre on [a,b].
QuadRule gauss_legendre(real a, real b, int n);

// Adaptive 1-D integration (Gauss-Kronrod 7-15) of a real function.
real integrate_adaptive(const std::function<real(real)>& f, real a, real b,
                        real abs_tol, real rel_tol, int max_depth = 48);

}  // namespace loggas
