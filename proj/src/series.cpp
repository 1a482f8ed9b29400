#include "loggas/series.hpp"

#include <cmath>

namespace loggas {

namespace {

constexpr int JMAX = AsymptoticSeries::KMAX + 4;

// (1 + r/N)^e  as coefficients of N^{-j}
std::vector<double> pow_series(double e, double r) {
    std::vector<double> g(JMAX + 1, 0.0);
    double binom = 1.0;
    for (int j = 0; j <= JMAX; ++j) {
        g[j] = binom * std::pow(r, j);
        binom *= (e - j) / (j + 1.0);
    }
    return g;
}

// ln(1 + r/N)
std::vector<double> log1p_series(double r) {
    std::vector<double> g(JMAX + 1, 0.0);
    for (int j = 1; j <= JMAX; ++j) g[j] = ((j % 2) ? 1.0 : -1.0) * std::pow(r, j) / j;
    return g;
}

// Adds  (poly in N) * (u + lnN + L(1/N))  where poly has coefficient p_k at
// N^{-k} (k may be negative) and L is a pure 1/N series.
void add_poly_times_log(AsymptoticSeries& s, const std::vector<std::pair<int, double>>& poly,
                        double u, const std::vector<double>& L) {
    for (auto [k, p] : poly) {
        if (p == 0.0) continue;
        s.b(k) += p;       // p * N^{-k} lnN
        s.a(k) += p * u;   // p * u * N^{-k}
        for (int j = 1; j <= JMAX; ++j) {
            int kk = k + j;
            if (kk > AsymptoticSeries::KMAX) break;
            s.a(kk) += p * L[j];
        }
    }
}

void add_pure(AsymptoticSeries& s, int k, double coeff, const std::vector<double>& serie) {
    for (int j = 0; j <= JMAX; ++j) {
        int kk = k + j;
        if (kk > AsymptoticSeries::KMAX) break;
        if (kk < AsymptoticSeries::KMIN) continue;
        s.a(kk) += coeff * serie[j];
    }
}

}  // namespace

AsymptoticSeries lgamma_series(double c, double d) {
    if (c <= 0.0) throw DomainError("lgamma_series: scale must be positive");
    AsymptoticSeries s;
    const double r = d / c;
    const double lc = std::log(c);
    auto L = log1p_series(r);

    // (x - 1/2) ln x
    add_poly_times_log(s, {{-1, c}, {0, d - 0.5}}, lc, L);
    // -x + (1/2) ln(2 pi)
    s.a(-1) += -c;
    s.a(0) += -d + 0.5 * std::log(2.0 * PI);
    // Stirling tail
    for (int m = 1; 2 * m - 1 <= AsymptoticSeries::KMAX; ++m) {
        double coeff = BERNOULLI[2 * m] / (2.0 * m * (2.0 * m - 1.0));
        add_pure(s, 2 * m - 1, coeff * std::pow(c, 1.0 - 2.0 * m), pow_series(1.0 - 2.0 * m, r));
    }
    return s;
}

std::vector<double> ek_coefficients(double b1, double b2, int kmax) {
    // 1/(1 - e^{-bt}) = sum_{n>=0} Bplus_n b^{n-1} t^{n-1} / n!
    auto factor = [&](double b) {
        std::vector<double> f(kmax + 4, 0.0);  // f[i] = coeff of t^{i-1}
        double fact = 1.0;
        for (int n = 0; n + 1 < static_cast<int>(f.size()) && n < 31; ++n) {
            if (n > 0) fact *= n;
            double bp = BERNOULLI[n] * ((n == 1) ? -1.0 : 1.0);
            f[n] = bp * std::pow(b, n - 1.0) / fact;
        }
        return f;
    };
    auto f1 = factor(b1), f2 = factor(b2);
    std::vector<double> ek(kmax + 3, 0.0);  // ek[k+2] = E_k
    for (int i = 0; i < static_cast<int>(f1.size()); ++i)
        for (int j = 0; j < static_cast<int>(f2.size()); ++j) {
            int k = (i - 1) + (j - 1);
            if (k >= -2 && k <= kmax) ek[k + 2] += f1[i] * f2[j];
        }
    return ek;
}

AsymptoticSeries lgamma2_series_no_const(double c, double d, double b1, double b2) {
    if (c <= 0.0 || b1 <= 0.0 || b2 <= 0.0)
        throw DomainError("lgamma2_series_no_const: positive parameters required");
    AsymptoticSeries s;
    const double r = d / c;
    const double lc = std::log(c);
    auto L = log1p_series(r);
    const double ib = 1.0 / (b1 * b2);

    // -x^2 ln x / (2 b1 b2)
    add_poly_times_log(
        s, {{-2, -0.5 * ib * c * c}, {-1, -0.5 * ib * 2.0 * c * d}, {0, -0.5 * ib * d * d}}, lc, L);
    // +3 x^2 / (4 b1 b2)
    s.a(-2) += 0.75 * ib * c * c;
    s.a(-1) += 0.75 * ib * 2.0 * c * d;
    s.a(0) += 0.75 * ib * d * d;
    // (b1+b2)/(2 b1 b2) (x ln x - x)
    const double cb = 0.5 * (b1 + b2) * ib;
    add_poly_times_log(s, {{-1, cb * c}, {0, cb * d}}, lc, L);
    s.a(-1) += -cb * c;
    s.a(0) += -cb * d;
    // -((b1^2 + b2^2 + 3 b1 b2)/(12 b1 b2)) ln x
    const double ce = (b1 * b1 + b2 * b2 + 3.0 * b1 * b2) / 12.0 * ib;
    add_poly_times_log(s, {{0, -ce}}, lc, L);
    // + sum_k (k-1)! E_k x^{-k}
    auto ek = ek_coefficients(b1, b2, AsymptoticSeries::KMAX);
    double fact = 1.0;
    for (int k = 1; k <= AsymptoticSeries::KMAX; ++k) {
        if (k > 1) fact *= (k - 1);
        add_pure(s, k, fact * ek[k + 2] * std::pow(c, -k), pow_series(-k, r));
    }
    return s;
}

}  // namespace loggas
