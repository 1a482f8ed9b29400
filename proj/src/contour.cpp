#include "loggas/contour.hpp"

#include <algorithm>

namespace loggas {

Ellipse make_ellipse(const Segment& around, real margin_x, real margin_y, int m) {
    Ellipse e;
    e.center = cplx(around.mid(), 0.0);
    e.a = 0.5 * around.length() + margin_x;
    e.b = margin_y;
    e.m = m;
    return e;
}

ContourLadder::ContourLadder(const std::vector<Segment>& cuts, int levels, int nodes,
                             real outer_limit_factor) {
    if (cuts.empty()) throw ContourError("contour ladder needs at least one cut");
    cuts_ = cuts;
    const int nc = static_cast<int>(cuts.size());

    // clearance per cut: distance to the nearest neighboring cut
    std::vector<real> clearance(nc, std::numeric_limits<real>::infinity());
    for (int h = 0; h < nc; ++h) {
        if (h > 0) clearance[h] = std::min(clearance[h], cuts[h].lo - cuts[h - 1].hi);
        if (h + 1 < nc) clearance[h] = std::min(clearance[h], cuts[h + 1].lo - cuts[h].hi);
        if (!std::isfinite(clearance[h])) clearance[h] = cuts[h].length();
        if (clearance[h] <= 0.0) throw CriticalityError("cuts touch; contour ladder impossible");
    }

    rings_.resize(levels);
    for (int l = 0; l < levels; ++l) {
        rings_[l].reserve(nc);
        for (int h = 0; h < nc; ++h) {
            real outer = outer_limit_factor * clearance[h];
            real inner = std::min(0.02 * cuts[h].length(), 0.25 * outer);
            // geometric progression of margins between inner and outer
            real f = (levels == 1) ? 1.0
                                   : inner * std::pow(outer / inner, static_cast<real>(l) /
                                                                        (levels - 1));
            real mx = (levels == 1) ? outer : f;
            real my = 0.8 * mx;
            rings_[l].push_back(make_ellipse(cuts[h], mx, my, nodes));
        }
    }
}

cplx ContourLadder::integrate(int level, const std::function<cplx(cplx)>& f) const {
    cplx s = 0.0;
    for (int h = 0; h < cut_count(); ++h) s += integrate_cut(level, h, f);
    return s;
}

cplx ContourLadder::integrate_cut(int level, int cut, const std::function<cplx(cplx)>& f) const {
    return ring(level, cut).integrate(f);
}

bool ContourLadder::outside(int level, cplx z, real pad) const {
    for (int h = 0; h < cut_count(); ++h)
        if (rings_.at(level).at(h).encloses(z, pad)) return false;
    return true;
}

}  // namespace loggas
