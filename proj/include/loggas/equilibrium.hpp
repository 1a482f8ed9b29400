#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "loggas/contour.hpp"
#include "loggas/potential.hpp"
#include "loggas/quadrature.hpp"

namespace loggas {

enum class EdgeType { Soft, Hard };

struct CutEdge {
    real position = 0.0;
    EdgeType type = EdgeType::Soft;
};

struct Cut {
    CutEdge lo, hi;
    int host_segment = 0;

    Segment seg() const { return Segment(lo.position, hi.position); }
};

struct SolveOptions {
    int contour_nodes = 128;
    real tol = 1e-12;
    int max_iter = 120;
    real margin_threshold = 1e-9;  // below: criticality error
    int grid_nodes = 240;          // oracle initializer resolution
    bool margin_error = true;
};

// Equilibrium measure with prescribed segment masses: cuts with edge types,
// the degree-<=g correction polynomial, Stieltjes transform, density,
// effective potential and energy. Immutable once solved.
class EquilibriumMeasure {
public:
    const Domain& domain() const { return domain_; }
    const AnalyticPotential& potential() const { return potential_; }
    const std::vector<Cut>& cuts() const { return cuts_; }
    const std::vector<real>& filling() const { return eps_; }
    const std::vector<real>& poly_P() const { return p_; }
    const std::vector<real>& numerator() const { return num_; }
    const std::vector<real>& lagrange_constants() const { return lagrange_; }
    int genus() const { return static_cast<int>(cuts_.size()) - 1; }

    std::vector<real> edge_positions() const;  // ascending, 2(g+1) values
    std::vector<Segment> cut_segments() const;

    // sqrt(prod (x - alpha)) with cuts exactly on the support; ~ x^{g+1}
    cplx sigma(cplx x) const;
    // boundary value of sigma from above at x inside cut h
    cplx sigma_upper(int cut, real x) const;

    cplx stieltjes(cplx x) const;              // ~ 1/x at infinity
    cplx stieltjes_derivative(cplx x) const;
    cplx y(cplx x) const;                      // V'/2 - stieltjes
    real density(real x) const;

    // quadrature nodes integrating f d(mu) over one cut (smooth f)
    QuadRule measure_rule(int cut, int n = 200) const;
    real integrate(const std::function<real(real)>& f, int n = 200) const;
    cplx integrate_cplx(const std::function<cplx(real)>& f, int n = 200) const;

    // log potential  int ln|x-xi| dmu(xi)
    real log_potential(real x) const;
    real effective_potential(real x) const;
    real energy() const;

    // |S| at every edge plus the effective-potential standoff values
    real offcritical_margin() const;
    std::vector<real> edge_s_values() const;

    // A-period of an arbitrary function via a small contour around cut h
    cplx cut_period(int cut, const std::function<cplx(cplx)>& f, int nodes = 256) const;

private:
    friend EquilibriumMeasure solve_fixed_filling(const AnalyticPotential&, const Domain&,
                                                  const std::vector<real>&,
                                                  const std::optional<std::vector<Cut>>&,
                                                  const SolveOptions&);
    void finalize();  // numerator, Lagrange constants

    Domain domain_;
    AnalyticPotential potential_;
    std::vector<Cut> cuts_;
    std::vector<real> eps_;
    std::vector<real> p_;         // correction polynomial, deg <= g
    std::vector<real> num_;       // [V' sigma]_+ - P
    std::vector<real> vprime_;    // order-0 potential derivative
    std::vector<real> lagrange_;  // C_h
};

EquilibriumMeasure solve_fixed_filling(const AnalyticPotential& p, const Domain& d,
                                       const std::vector<real>& eps,
                                       const std::optional<std::vector<Cut>>& cut_hint = {},
                                       const SolveOptions& opts = {});

std::pair<EquilibriumMeasure, std::vector<real>> solve_optimal(const AnalyticPotential& p,
                                                               const Domain& d,
                                                               const SolveOptions& opts = {});

}  // namespace loggas
