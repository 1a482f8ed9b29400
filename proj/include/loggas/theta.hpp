#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "loggas/common.hpp"

namespace loggas {

using Vec = Eigen::VectorXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Mat = Eigen::MatrixXd;

// Siegel theta function with characteristics:
//   theta[mu;nu](v|tau) = sum_{m in Z^g} exp(i pi (m+mu).tau.(m+mu)
//                                            + 2 i pi (v+nu).(m+mu))
struct ThetaParams {
    int g = 1;
    Vec mu;
    Vec nu;
    CVec v;
    CMat tau;

    static ThetaParams make(const Vec& mu, const Vec& nu, const CVec& v, const CMat& tau);
};

// Dense symmetric tensor of order j over g directions, stored flat (g^j).
struct DenseTensor {
    int g = 0;
    int order = 0;
    std::vector<cplx> data;  // index = sum_i idx[i] * g^i

    static DenseTensor zeros(int g, int order);
    cplx& at(const std::vector<int>& idx);
    cplx at(const std::vector<int>& idx) const;
    // contraction against x^{ic_order}: full contraction with vectors
    cplx contract(const std::vector<CVec>& xs) const;
};

struct DerivTensorSet {
    std::map<int, DenseTensor> tensors;  // order j -> grad^j theta
};

// Smallest eigenvalue of Im tau (must be positive).
real im_tau_min_eigenvalue(const CMat& tau);

cplx theta(const ThetaParams& p, real tol = 1e-12);

// Lattice moment sums sum (m+mu)^{otimes j} e^{...}; gradient tensors are
// (2 i pi)^j times these.
DenseTensor theta_moment(const ThetaParams& p, int j, real tol = 1e-12);
DerivTensorSet theta_grad(const ThetaParams& p, int j_max, real tol = 1e-12);

// Free-energy derivative data used by the correction operators: for each
// expansion order m >= -2, the tensors of eps-derivatives (order ell >= 1).
struct FreeEnergyTensors {
    int g = 0;
    // key (m, ell) -> symmetric tensor of order ell (real entries stored complex)
    std::map<std::pair<int, int>, DenseTensor> deriv;
    bool has(int m, int ell) const { return deriv.count({m, ell}) > 0; }
    const DenseTensor& get(int m, int ell) const;
};

// T^{k}-corrected theta values: returns, for k = 0..k_max, the value of
// T^{k}[grad_v / (2 i pi)] theta(params); T^{0} term is theta itself.
std::vector<cplx> apply_T_operator(const FreeEnergyTensors& tensors, const ThetaParams& p,
                                   int k_max, real tol = 1e-12);

}  // namespace loggas
