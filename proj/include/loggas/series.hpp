#pragma once

#include <array>
#include <cmath>
#include <map>

#include "loggas/common.hpp"

namespace loggas {

// Bernoulli numbers B_0..B_30 (B_1 = -1/2 convention).
inline constexpr std::array<double, 31> BERNOULLI = {
    1.0,
    -0.5,
    1.0 / 6.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    1.0 / 42.0,
    0.0,
    -1.0 / 30.0,
    0.0,
    5.0 / 66.0,
    0.0,
    -691.0 / 2730.0,
    0.0,
    7.0 / 6.0,
    0.0,
    -3617.0 / 510.0,
    0.0,
    43867.0 / 798.0,
    0.0,
    -174611.0 / 330.0,
    0.0,
    854513.0 / 138.0,
    0.0,
    -236364091.0 / 2730.0,
    0.0,
    8553103.0 / 6.0,
    0.0,
    -23749461029.0 / 870.0,
    0.0,
    8615841276005.0 / 14322.0,
};

// Truncated expansion in powers of 1/N with an optional log N weight:
//   f(N) = sum_k (a_k + b_k ln N) N^{-k},   kmin <= k <= kmax.
// Used to assemble the large-N behavior of the exactly solvable partition
// functions out of Stirling-type pieces.
class AsymptoticSeries {
public:
    static constexpr int KMIN = -4;
    static constexpr int KMAX = 8;

    AsymptoticSeries() = default;

    double& a(int k) { return a_.at(idx(k)); }
    double& b(int k) { return b_.at(idx(k)); }
    double a(int k) const { return a_.at(idx(k)); }
    double b(int k) const { return b_.at(idx(k)); }

    AsymptoticSeries& operator+=(const AsymptoticSeries& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) {
            a_[i] += o.a_[i];
            b_[i] += o.b_[i];
        }
        return *this;
    }
    AsymptoticSeries& operator-=(const AsymptoticSeries& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) {
            a_[i] -= o.a_[i];
            b_[i] -= o.b_[i];
        }
        return *this;
    }
    AsymptoticSeries& operator*=(double c) {
        for (std::size_t i = 0; i < a_.size(); ++i) {
            a_[i] *= c;
            b_[i] *= c;
        }
        return *this;
    }
    friend AsymptoticSeries operator+(AsymptoticSeries x, const AsymptoticSeries& y) { return x += y; }
    friend AsymptoticSeries operator-(AsymptoticSeries x, const AsymptoticSeries& y) { return x -= y; }
    friend AsymptoticSeries operator*(double c, AsymptoticSeries x) { return x *= c; }

    // Adds c * N^{-k} (and optionally c * N^{-k} ln N).
    void add_term(int k, double c, double clog = 0.0) {
        a(k) += c;
        b(k) += clog;
    }

    double eval(double N) const {
        double lN = std::log(N);
        KahanSum s;
        for (int k = KMAX; k >= KMIN; --k) {
            double p = std::pow(N, -k);
            s.add((a(k) + b(k) * lN) * p);
        }
        return s.value();
    }

    // Value truncated at term N^{-kcut} inclusive.
    double eval_through(double N, int kcut) const {
        double lN = std::log(N);
        KahanSum s;
        for (int k = std::min(kcut, KMAX); k >= KMIN; --k)
            s.add((a(k) + b(k) * lN) * std::pow(N, -k));
        return s.value();
    }

private:
    static std::size_t idx(int k) {
        if (k < KMIN || k > KMAX) throw Error("asymptotic series order out of range");
        return static_cast<std::size_t>(k - KMIN);
    }
    std::array<double, KMAX - KMIN + 1> a_{};
    std::array<double, KMAX - KMIN + 1> b_{};
};

// ln Gamma(c N + d) as an AsymptoticSeries in N (c > 0).
AsymptoticSeries lgamma_series(double c, double d);

// ln Gamma2(c N + d ; b1, b2) without its additive constant -chi'(0;b1,b2);
// the constant is supplied separately (it is obtained numerically).
AsymptoticSeries lgamma2_series_no_const(double c, double d, double b1, double b2);

// Coefficients E_k(b1,b2), -2 <= k <= kmax, of the Laurent expansion of
// 1/((1-e^{-b1 t})(1-e^{-b2 t})) at t=0.
std::vector<double> ek_coefficients(double b1, double b2, int kmax);

}  // namespace loggas
