#pragma once

#include <functional>
#include <vector>

#include "loggas/common.hpp"

namespace loggas {

// Elliptic contour around a real segment, positively oriented, sampled at
// equally spaced angles (trapezoid rule; spectrally accurate for analytic
// integrands).
struct Ellipse {
    cplx center;
    real a = 1.0;  // semi-axis along the real direction
    real b = 0.5;
    int m = 128;

    cplx point(int j) const {
        real t = 2.0 * PI * j / m;
        return center + cplx(a * std::cos(t), b * std::sin(t));
    }
    cplx dpoint(int j) const {  // dz/dtheta
        real t = 2.0 * PI * j / m;
        return cplx(-a * std::sin(t), b * std::cos(t));
    }
    bool encloses(cplx z, real pad = 0.0) const {
        real xr = (z.real() - center.real()) / (a + pad);
        real xi = (z.imag() - center.imag()) / (b + pad);
        return xr * xr + xi * xi <= 1.0;
    }

    // contour integral  (1/2 pi i) \oint f dz
    template <typename F>
    cplx integrate(F&& f) const {
        cplx s = 0.0;
        for (int j = 0; j < m; ++j) s += f(point(j)) * dpoint(j);
        return s / (cplx(0.0, 1.0) * static_cast<real>(m));
    }
};

Ellipse make_ellipse(const Segment& around, real margin_x, real margin_y, int m);

// Nested ladder of per-cut contours; level 0 hugs the cuts, higher levels
// move outward. Operators integrate on one level and are evaluated on any
// strictly larger level.
class ContourLadder {
public:
    ContourLadder() = default;
    ContourLadder(const std::vector<Segment>& cuts, int levels, int nodes,
                  real outer_limit_factor = 0.45);

    int levels() const { return static_cast<int>(rings_.size()); }
    int cut_count() const { return rings_.empty() ? 0 : static_cast<int>(rings_[0].size()); }
    const Ellipse& ring(int level, int cut) const { return rings_.at(level).at(cut); }
    const std::vector<Segment>& cuts() const { return cuts_; }

    // sum over all cuts of (1/2 pi i) \oint f dz on a level
    cplx integrate(int level, const std::function<cplx(cplx)>& f) const;
    // single-cut period on a level
    cplx integrate_cut(int level, int cut, const std::function<cplx(cplx)>& f) const;

    // true when z lies strictly outside every ellipse of the level
    bool outside(int level, cplx z, real pad = 0.0) const;

private:
    std::vector<Segment> cuts_;
    std::vector<std::vector<Ellipse>> rings_;  // [level][cut]
};

}  // namespace loggas
