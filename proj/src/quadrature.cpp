#include "loggas/quadrature.hpp"

#include <cmath>

namespace loggas {

QuadRule jacobi_half_rule(real lo, real hi, int rho_lo, int rho_hi, int n) {
    if (!(lo < hi)) throw DomainError("jacobi_half_rule: empty interval");
    if (std::abs(rho_lo) != 1 || std::abs(rho_hi) != 1)
        throw DomainError("edge exponents must be +1 or -1");
    const real mid = 0.5 * (lo + hi), hw = 0.5 * (hi - lo);
    QuadRule r;
    r.x.resize(n);
    r.w.resize(n);
    // x = mid + hw cos(t):   (x-lo) = hw(1+cos t) = 2 hw cos^2(t/2)
    //                        (hi-x) = hw(1-cos t) = 2 hw sin^2(t/2)
    // so (x-lo)^{rl/2} (hi-x)^{rh/2} dx reduces to a smooth periodic
    // integrand in t; the midpoint rule below is spectrally accurate.
    for (int k = 0; k < n; ++k) {
        real t = PI * (k + 0.5) / n;
        real c2 = std::cos(0.5 * t), s2 = std::sin(0.5 * t);
        real x = mid + hw * std::cos(t);
        real w = PI / n;                 // dt weight
        w *= hw * 2.0 * s2 * c2;         // |dx/dt| = hw sin t
        w *= std::pow(2.0 * hw * c2 * c2, 0.5 * rho_lo);
        w *= std::pow(2.0 * hw * s2 * s2, 0.5 * rho_hi);
        r.x[k] = x;
        r.w[k] = w;
    }
    return r;
}

QuadRule gauss_legendre(real a, real b, int n) {
    QuadRule r;
    r.x.resize(n);
    r.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton on P_n with Chebyshev-like initial guess
        real x = std::cos(PI * (i + 0.75) / (n + 0.5));
        real pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            real p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                real p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            real dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        real xm = 0.5 * (b + a), xl = 0.5 * (b - a);
        r.x[i] = xm - xl * x;
        r.x[n - 1 - i] = xm + xl * x;
        r.w[i] = 2.0 * xl / ((1.0 - x * x) * pp * pp);
        r.w[n - 1 - i] = r.w[i];
    }
    return r;
}

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1,1] (QUADPACK values).
const real GK_X[8] = {0.991455371120813, 0.949107912342759, 0.864864423359769,
                      0.741531185599394, 0.586087235467691, 0.405845151377397,
                      0.207784955007898, 0.0};
const real GK_WK[8] = {0.022935322010529, 0.063092092629979, 0.104790010322250,
                       0.140653259715525, 0.169004726639267, 0.190350578064785,
                       0.204432940075298, 0.209482141084728};
const real GK_WG[4] = {0.129484966168870, 0.279705391489277, 0.381830050505119,
                       0.417959183673469};

struct GKResult {
    real value;
    real err;
};

GKResult gk15(const std::function<real(real)>& f, real a, real b) {
    const real c = 0.5 * (a + b), h = 0.5 * (b - a);
    real fc = f(c);
    real resk = fc * GK_WK[7];
    real resg = fc * GK_WG[3];
    for (int j = 0; j < 7; ++j) {
        real fv1 = f(c - h * GK_X[j]);
        real fv2 = f(c + h * GK_X[j]);
        resk += GK_WK[j] * (fv1 + fv2);
        if (j % 2 == 1) resg += GK_WG[j / 2] * (fv1 + fv2);
    }
    return {resk * h, std::abs((resk - resg) * h)};
}

void adapt(const std::function<real(real)>& f, real a, real b, real abs_tol,
           real rel_tol, int depth, int max_depth, KahanSum& acc, real& err_acc,
           real scale) {
    GKResult r = gk15(f, a, b);
    real tol = std::max(abs_tol, rel_tol * std::max(scale, std::abs(r.value)));
    if (r.err <= tol || depth >= max_depth) {
        acc.add(r.value);
        err_acc += r.err;
        return;
    }
    real m = 0.5 * (a + b);
    adapt(f, a, m, 0.5 * abs_tol, rel_tol, depth + 1, max_depth, acc, err_acc, scale);
    adapt(f, m, b, 0.5 * abs_tol, rel_tol, depth + 1, max_depth, acc, err_acc, scale);
}

}  // namespace

real integrate_adaptive(const std::function<real(real)>& f, real a, real b,
                        real abs_tol, real rel_tol, int max_depth) {
    KahanSum acc;
    real err = 0.0;
    GKResult first = gk15(f, a, b);
    adapt(f, a, b, abs_tol, rel_tol, 0, max_depth, acc, err, std::abs(first.value));
    return acc.value();
}

}  // namespace loggas
