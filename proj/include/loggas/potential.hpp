#pragma once

#include <vector>

#include "loggas/common.hpp"

namespace loggas {

// Point charge of the logarithmic kernel, located off the domain. The stored
// weight already carries the normalization chosen by the caller, so a piece
// containing charges evaluates to  sum_j weight_j * log(location_j - x).
struct LogCharge {
    cplx location;
    cplx weight;
};

// One coefficient of the 1/N expansion of the potential: a polynomial (real
// coefficients, ascending degree) plus log charges.
struct PotentialPiece {
    std::vector<real> poly;
    std::vector<LogCharge> charges;

    cplx eval(cplx x) const;
    cplx deriv(cplx x, int order) const;
    bool empty() const { return poly.empty() && charges.empty(); }
};

class AnalyticPotential {
public:
    AnalyticPotential() = default;
    explicit AnalyticPotential(std::vector<real> order0_poly) {
        pieces_.push_back(PotentialPiece{std::move(order0_poly), {}});
    }

    static AnalyticPotential zero() { return AnalyticPotential(std::vector<real>{}); }

    std::size_t order_count() const { return pieces_.size(); }
    const PotentialPiece& piece(std::size_t k) const { return pieces_.at(k); }
    PotentialPiece& piece_mut(std::size_t k) {
        if (k >= pieces_.size()) pieces_.resize(k + 1);
        return pieces_[k];
    }

    // sum_k n_inverse^k piece_k(x)
    cplx eval(cplx x, real n_inverse) const;
    cplx eval_derivative(cplx x, real n_inverse, int order) const;

    // Derivative of a single expansion order.
    cplx piece_deriv(std::size_t k, cplx x, int order) const;

    // V - (2 / (beta N)) sum_j c_j log(x_j - .) encoded as order-1 charges.
    AnalyticPotential perturb_with_logs(const std::vector<cplx>& points,
                                        const std::vector<cplx>& charges, real beta,
                                        const Domain& domain) const;

    AnalyticPotential scaled(real factor) const;  // factor * V, all orders

    bool order0_is_polynomial() const {
        return pieces_.empty() || pieces_[0].charges.empty();
    }
    std::vector<real> order0_poly() const {
        return pieces_.empty() ? std::vector<real>{} : pieces_[0].poly;
    }

private:
    void check_regular(cplx x) const;
    std::vector<PotentialPiece> pieces_;
};

}  // namespace loggas
