#pragma once

#include <vector>

#include "loggas/common.hpp"

namespace loggas {

// Dense real polynomials, ascending coefficients.
inline cplx poly_eval(const std::vector<real>& c, cplx x) {
    cplx p = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * x + *it;
    return p;
}

inline real poly_eval(const std::vector<real>& c, real x) {
    real p = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) p = p * x + *it;
    return p;
}

inline std::vector<real> poly_derivative(const std::vector<real>& c) {
    std::vector<real> d;
    for (std::size_t m = 1; m < c.size(); ++m) d.push_back(m * c[m]);
    return d;
}

inline std::vector<real> poly_mul(const std::vector<real>& a, const std::vector<real>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<real> c(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

// Power-series square root: given q with q[0] = 1, returns s with s*s = q
// (truncated at q.size() terms).
inline std::vector<real> series_sqrt(const std::vector<real>& q) {
    std::vector<real> s(q.size(), 0.0);
    s[0] = 1.0;
    for (std::size_t k = 1; k < q.size(); ++k) {
        real acc = q[k];
        for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
        s[k] = 0.5 * acc;
    }
    return s;
}

}  // namespace loggas
