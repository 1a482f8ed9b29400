#include "loggas/potential.hpp"

#include <cmath>

namespace loggas {

cplx PotentialPiece::eval(cplx x) const {
    cplx p = 0.0;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) p = p * x + *it;
    for (const auto& c : charges) {
        cplx d = c.location - x;
        if (std::abs(d) < 1e-13)
            throw SingularityError("potential evaluated at a log-charge location");
        p += c.weight * std::log(d);
    }
    return p;
}

cplx PotentialPiece::deriv(cplx x, int order) const {
    if (order <= 0) return eval(x);
    // Horner on the term-wise differentiated coefficients
    std::vector<real> dc;
    if (poly.size() > static_cast<std::size_t>(order)) {
        dc.resize(poly.size() - order);
        for (std::size_t m = order; m < poly.size(); ++m) {
            real c = poly[m];
            for (int j = 0; j < order; ++j) c *= static_cast<real>(m - j);
            dc[m - order] = c;
        }
    }
    cplx p = 0.0;
    for (auto it = dc.rbegin(); it != dc.rend(); ++it) p = p * x + *it;
    for (const auto& c : charges) {
        cplx d = c.location - x;
        if (std::abs(d) < 1e-13)
            throw SingularityError("potential derivative at a log-charge location");
        // d^m/dx^m log(z - x) = -(m-1)! (z-x)^{-m}
        real fact = 1.0;
        for (int j = 1; j < order; ++j) fact *= j;
        p += -c.weight * fact * std::pow(d, -static_cast<real>(order));
    }
    return p;
}

void AnalyticPotential::check_regular(cplx x) const {
    for (const auto& pc : pieces_)
        for (const auto& c : pc.charges)
            if (std::abs(c.location - x) < 1e-13)
                throw SingularityError("evaluation at a log-charge location");
}

cplx AnalyticPotential::eval(cplx x, real n_inverse) const {
    check_regular(x);
    cplx s = 0.0;
    real p = 1.0;
    for (const auto& pc : pieces_) {
        if (!pc.empty()) s += p * pc.eval(x);
        p *= n_inverse;
        if (p == 0.0) break;
    }
    return s;
}

cplx AnalyticPotential::eval_derivative(cplx x, real n_inverse, int order) const {
    check_regular(x);
    cplx s = 0.0;
    real p = 1.0;
    for (const auto& pc : pieces_) {
        if (!pc.empty()) s += p * pc.deriv(x, order);
        p *= n_inverse;
        if (p == 0.0) break;
    }
    return s;
}

cplx AnalyticPotential::piece_deriv(std::size_t k, cplx x, int order) const {
    if (k >= pieces_.size()) return 0.0;
    return pieces_[k].deriv(x, order);
}

AnalyticPotential AnalyticPotential::perturb_with_logs(const std::vector<cplx>& points,
                                                       const std::vector<cplx>& charges,
                                                       real beta,
                                                       const Domain& domain) const {
    if (points.size() != charges.size())
        throw DomainError("perturb_with_logs: points/charges length mismatch");
    AnalyticPotential out = *this;
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (domain.distance(points[j]) <= 0.0 ||
            (points[j].imag() == 0.0 && points[j].real() >= domain.lo() &&
             points[j].real() <= domain.hi() && domain.contains(points[j].real())))
            throw DomainError("log charge located on the domain");
        out.piece_mut(1).charges.push_back(LogCharge{points[j], -2.0 * charges[j] / beta});
    }
    return out;
}

AnalyticPotential AnalyticPotential::scaled(real factor) const {
    AnalyticPotential out = *this;
    for (auto& pc : out.pieces_) {
        for (auto& c : pc.poly) c *= factor;
        for (auto& c : pc.charges) c.weight *= factor;
    }
    return out;
}

}  // namespace loggas
