#include "loggas/theta.hpp"

#include <cmath>
#include <functional>

namespace loggas {

ThetaParams ThetaParams::make(const Vec& mu, const Vec& nu, const CVec& v, const CMat& tau) {
    ThetaParams p;
    p.g = static_cast<int>(mu.size());
    if (nu.size() != p.g || v.size() != p.g || tau.rows() != p.g || tau.cols() != p.g)
        throw DomainError("theta: inconsistent dimensions");
    if ((tau - tau.transpose()).norm() > 1e-10 * (1.0 + tau.norm()))
        throw DomainError("theta: tau must be symmetric");
    p.mu = mu;
    p.nu = nu;
    p.v = v;
    p.tau = tau;
    if (im_tau_min_eigenvalue(tau) <= 0.0)
        throw DomainError("theta: Im tau must be positive definite");
    return p;
}

real im_tau_min_eigenvalue(const CMat& tau) {
    Mat im = tau.imag();
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (im + im.transpose()));
    return es.eigenvalues().minCoeff();
}

DenseTensor DenseTensor::zeros(int g, int order) {
    DenseTensor t;
    t.g = g;
    t.order = order;
    std::size_t n = 1;
    for (int i = 0; i < order; ++i) n *= g;
    t.data.assign(n, cplx(0.0));
    return t;
}

cplx& DenseTensor::at(const std::vector<int>& idx) {
    std::size_t k = 0;
    for (int i = 0; i < order; ++i) k = k * g + idx[i];
    return data[k];
}

cplx DenseTensor::at(const std::vector<int>& idx) const {
    std::size_t k = 0;
    for (int i = 0; i < order; ++i) k = k * g + idx[i];
    return data[k];
}

cplx DenseTensor::contract(const std::vector<CVec>& xs) const {
    if (static_cast<int>(xs.size()) != order)
        throw DomainError("tensor contraction: arity mismatch");
    cplx total = 0.0;
    std::vector<int> idx(order, 0);
    for (std::size_t flat = 0; flat < data.size(); ++flat) {
        std::size_t r = flat;
        for (int i = order - 1; i >= 0; --i) {
            idx[i] = static_cast<int>(r % g);
            r /= g;
        }
        cplx term = data[flat];
        for (int i = 0; i < order; ++i) term *= xs[i](idx[i]);
        total += term;
    }
    return total;
}

const DenseTensor& FreeEnergyTensors::get(int m, int ell) const {
    auto it = deriv.find({m, ell});
    if (it == deriv.end())
        throw DependencyError("missing free-energy derivative tensor (m=" + std::to_string(m) +
                              ", ell=" + std::to_string(ell) + ")");
    return it->second;
}

namespace {

// Truncation radius from the Gaussian tail bound: contributions beyond
// ||m + mu|| > R are below tol when R = shift + sqrt(ln(1/tol)/(pi lam)) + 2.
int truncation_radius(const ThetaParams& p, real tol, int extra_poly_order) {
    real lam = im_tau_min_eigenvalue(p.tau);
    if (lam <= 0.0) throw DomainError("theta: Im tau must be positive definite");
    real shift = p.mu.cwiseAbs().maxCoeff();
    for (int h = 0; h < p.g; ++h) shift = std::max(shift, std::abs(p.v(h).imag()) / lam);
    real r = shift + std::sqrt(std::log(1.0 / tol) / (PI * lam)) + 2.0 + 0.5 * extra_poly_order;
    return static_cast<int>(std::ceil(r));
}

template <typename F>
void lattice_sum(const ThetaParams& p, int radius, F&& body) {
    std::vector<int> m(p.g, -radius);
    Vec mm(p.g);
    while (true) {
        for (int h = 0; h < p.g; ++h) mm(h) = m[h] + p.mu(h);
        cplx phase = 0.0;
        for (int h = 0; h < p.g; ++h) {
            for (int h2 = 0; h2 < p.g; ++h2) phase += cplx(0, PI) * mm(h) * p.tau(h, h2) * mm(h2);
            phase += cplx(0, 2.0 * PI) * (p.v(h) + p.nu(h)) * mm(h);
        }
        body(mm, std::exp(phase));
        int h = 0;
        for (; h < p.g; ++h) {
            if (++m[h] <= radius) break;
            m[h] = -radius;
        }
        if (h == p.g) break;
    }
}

}  // namespace

cplx theta(const ThetaParams& p, real tol) {
    int R = truncation_radius(p, tol, 0);
    cplx s = 0.0;
    lattice_sum(p, R, [&](const Vec&, cplx w) { s += w; });
    return s;
}

DenseTensor theta_moment(const ThetaParams& p, int j, real tol) {
    int R = truncation_radius(p, tol, j);
    DenseTensor t = DenseTensor::zeros(p.g, j);
    std::vector<int> idx(j, 0);
    lattice_sum(p, R, [&](const Vec& mm, cplx w) {
        for (std::size_t flat = 0; flat < t.data.size(); ++flat) {
            std::size_t r = flat;
            real prod = 1.0;
            for (int i = 0; i < j; ++i) {
                prod *= mm(static_cast<int>(r % p.g));
                r /= p.g;
            }
            t.data[flat] += prod * w;
        }
    });
    return t;
}

DerivTensorSet theta_grad(const ThetaParams& p, int j_max, real tol) {
    DerivTensorSet out;
    for (int j = 0; j <= j_max; ++j) {
        DenseTensor t = theta_moment(p, j, tol);
        cplx factor = std::pow(cplx(0.0, 2.0 * PI), j);
        for (auto& x : t.data) x *= factor;
        out.tensors[j] = std::move(t);
    }
    return out;
}

namespace {

// Ordered tuples (ell_i, m_i), ell_i >= 1, m_i >= -2, ell_i + m_i >= 1,
// sum (ell_i + m_i) = k. Each tuple contributes
//   (1/r!) prod (F^{m_i})^{(ell_i)} / ell_i!
// contracted against the lattice moment of order sum ell_i.
struct Part {
    int ell;
    int m;
};

void enumerate_tuples(int k_left, int r, std::vector<Part>& cur,
                      const std::function<void(const std::vector<Part>&)>& emit) {
    if (k_left == 0) {
        if (!cur.empty()) emit(cur);
        return;
    }
    for (int w = 1; w <= k_left; ++w) {          // weight ell + m of this part
        for (int ell = 1; ell <= w + 2; ++ell) { // m = w - ell >= -2
            int m = w - ell;
            if (m < -2) continue;
            cur.push_back({ell, m});
            enumerate_tuples(k_left - w, r + 1, cur, emit);
            cur.pop_back();
        }
    }
}

real factorial(int n) {
    real f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::vector<cplx> apply_T_operator(const FreeEnergyTensors& tensors, const ThetaParams& p,
                                   int k_max, real tol) {
    std::vector<cplx> out(k_max + 1);
    out[0] = theta(p, tol);

    // lattice moments up to the largest total derivative order needed
    int max_order = 3 * k_max;  // ell <= k + 2 per part, but total sum ell <= 3k
    std::map<int, DenseTensor> moments;
    for (int j = 0; j <= max_order; ++j) moments[j] = theta_moment(p, j, tol);

    for (int k = 1; k <= k_max; ++k) {
        cplx total = 0.0;
        std::vector<Part> cur;
        enumerate_tuples(k, 0, cur, [&](const std::vector<Part>& parts) {
            int ell_sum = 0;
            for (const auto& pt : parts) ell_sum += pt.ell;
            // product of tensors contracted against the moment tensor
            const DenseTensor& mom = moments.at(ell_sum);
            // flatten: iterate over moment indices, split among parts
            cplx coeff = 1.0 / factorial(static_cast<int>(parts.size()));
            for (const auto& pt : parts) coeff /= factorial(pt.ell);
            // gather tensors first (throws DependencyError if absent)
            std::vector<const DenseTensor*> ts;
            for (const auto& pt : parts) ts.push_back(&tensors.get(pt.m, pt.ell));
            cplx sum = 0.0;
            std::vector<int> idx(ell_sum, 0);
            std::size_t nflat = mom.data.size();
            for (std::size_t flat = 0; flat < nflat; ++flat) {
                std::size_t r = flat;
                for (int i = ell_sum - 1; i >= 0; --i) {
                    idx[i] = static_cast<int>(r % p.g);
                    r /= p.g;
                }
                cplx term = mom.data[flat];
                int pos = 0;
                for (std::size_t q = 0; q < parts.size(); ++q) {
                    std::size_t tf = 0;
                    for (int i = 0; i < parts[q].ell; ++i) tf = tf * p.g + idx[pos + i];
                    term *= ts[q]->data[tf];
                    pos += parts[q].ell;
                }
                sum += term;
            }
            total += coeff * sum;
        });
        out[k] = total;
    }
    return out;
}

}  // namespace loggas
