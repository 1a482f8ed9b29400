#include "loggas/selberg.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "loggas/branch.hpp"

namespace loggas {

EdgeSignature EdgeSignature::parse(const std::string& s) {
    if (s.size() != 2 || (s[0] != '+' && s[0] != '-') || (s[1] != '+' && s[1] != '-'))
        throw ConfigError("edge signature must be one of ++, -+, +-, --");
    return EdgeSignature{s[0] == '+' ? +1 : -1, s[1] == '+' ? +1 : -1};
}

AnalyticPotential reference_potential(const ReferenceModel& m) {
    const real lo = m.gamma.lo, hi = m.gamma.hi, len = hi - lo, mid = 0.5 * (lo + hi);
    const int rl = m.signature.lo, rh = m.signature.hi;
    if (rl > 0 && rh > 0) {
        // 8/len^2 (x - mid)^2
        const real c = 8.0 / (len * len);
        return AnalyticPotential({c * mid * mid, -2.0 * c * mid, c});
    }
    if (rl < 0 && rh > 0) {
        // 4 (x - lo) / len
        return AnalyticPotential({-4.0 * lo / len, 4.0 / len});
    }
    if (rl > 0 && rh < 0) {
        // 4 (hi - x) / len
        return AnalyticPotential({4.0 * hi / len, -4.0 / len});
    }
    return AnalyticPotential(std::vector<real>{});  // flat potential
}

real reference_density_constant(const ReferenceModel& m) {
    const real len = m.gamma.length();
    const int rl = m.signature.lo, rh = m.signature.hi;
    if (rl > 0 && rh > 0) return 8.0 / (len * len);
    if (rl != rh) return 2.0 / len;
    return 1.0;
}

cplx reference_w1m1(const ReferenceModel& m, cplx x) {
    const real lo = m.gamma.lo, hi = m.gamma.hi;
    const real delta = 0.25 * (hi - lo), mid = 0.5 * (lo + hi);
    const int rl = m.signature.lo, rh = m.signature.hi;
    const cplx a = std::sqrt(x - cplx(lo)), b = std::sqrt(x - cplx(hi));
    if (rl > 0 && rh > 0) return ((x - mid) - a * b) / (2.0 * delta * delta);
    if (rl < 0 && rh > 0) return (1.0 - b / a) / (2.0 * delta);
    if (rl > 0 && rh < 0) return (1.0 - a / b) / (2.0 * delta);
    return 1.0 / (a * b);
}

cplx reference_w1_0(const ReferenceModel& m, real beta, cplx x) {
    const real lo = m.gamma.lo, hi = m.gamma.hi;
    const real delta = 0.25 * (hi - lo), mid = 0.5 * (lo + hi);
    const cplx q = (x - lo) * (x - hi);
    const int rl = m.signature.lo, rh = m.signature.hi;
    const real pref = 1.0 - 2.0 / beta;
    if (rl == rh)  // ++ and -- share the same order-0 term
        return 0.5 * pref * (1.0 / cut_sqrt(m.gamma, x) - (x - mid) / q);
    return -pref * delta / q;
}

cplx reference_w2_0(const Segment& gamma, real beta, cplx x1, cplx x2) {
    // Stable rewriting of the universal one-cut two-point function: with
    // s_i the branch-continuous sqrt((x_i-lo)(x_i-hi)) and
    // num = x1 x2 - (x1+x2) mid + lo*hi,
    //   W2 = (2/beta) hw^2 / (2 (num + s1 s2) s1 s2),
    // finite at coinciding points (hw = half width).
    const real mid = gamma.mid(), hw = 0.5 * gamma.length();
    const cplx s1 = cut_sqrt(gamma, x1), s2 = cut_sqrt(gamma, x2);
    const cplx num = x1 * x2 - (x1 + x2) * mid + gamma.lo * gamma.hi;
    return (2.0 / beta) * hw * hw / (2.0 * (num + s1 * s2) * s1 * s2);
}

real selberg_exact(const EdgeSignature& sig, int n, real beta) {
    if (n < 0) throw DomainError("selberg_exact: n >= 0 required");
    if (n == 0) return 0.0;
    const real b2 = 0.5 * beta;
    KahanSum s;
    if (sig.lo > 0 && sig.hi > 0) {
        s.add(-(beta * n * n / 4.0 + (1.0 - b2) * n / 2.0) * std::log(b2 * n));
        s.add(0.5 * n * std::log(2.0 * PI));
        for (int j = 1; j <= n; ++j) s.add(std::lgamma(1.0 + j * b2));
        s.add(-n * std::lgamma(1.0 + b2));
    } else if (sig.lo != sig.hi) {
        s.add(-(beta * n * n / 2.0 + (1.0 - b2) * n) * std::log(b2 * n));
        for (int j = 1; j <= n; ++j)
            s.add(std::lgamma(1.0 + j * b2) + std::lgamma(1.0 + (j - 1) * b2));
        s.add(-n * std::lgamma(1.0 + b2));
    } else {
        s.add((beta * n * n + (2.0 - beta) * n) * std::log(2.0));
        for (int j = 1; j <= n; ++j) {
            s.add(2.0 * std::lgamma(1.0 + (j - 1) * b2) + std::lgamma(1.0 + j * b2));
            s.add(-std::lgamma(2.0 + (n - 2 + j) * b2));
        }
        s.add(-n * std::lgamma(1.0 + b2));
    }
    return s.value();
}

real selberg_exact_scaled(const ReferenceModel& m, int n, real beta) {
    const real scale = std::log(m.gamma.length() / 4.0);
    return selberg_exact(m.signature, n, beta) -
           (0.5 * beta * n * n + (1.0 - 0.5 * beta) * n) * scale;
}

namespace {

real gamma2_ladder_from_one(int steps, real b1, real b2) {
    // ln Gamma2(1 + steps*b2) accumulated through the functional equation,
    // starting from Gamma2(1) = 1.
    KahanSum s;
    const real lb1 = std::log(b1);
    for (int j = 0; j < steps; ++j) {
        real y = 1.0 + j * b2;
        s.add(0.5 * std::log(2.0 * PI) + (0.5 - y / b1) * lb1 - std::lgamma(y / b1));
    }
    return s.value();
}

std::mutex g2_mutex;
std::map<std::pair<real, real>, real> g2_cache;

}  // namespace

real gamma2_asymptotic_constant(real b1, real b2) {
    if (b1 <= 0.0 || b2 <= 0.0) throw DomainError("gamma2: scales must be positive");
    {
        std::lock_guard<std::mutex> lk(g2_mutex);
        auto it = g2_cache.find({b1, b2});
        if (it != g2_cache.end()) return it->second;
    }
    const int steps = static_cast<int>(std::ceil(std::max(400.0, 400.0 * b1) / b2));
    const real x = 1.0 + steps * b2;
    const real exact = gamma2_ladder_from_one(steps, b1, b2);
    const real series = lgamma2_series_no_const(1.0, 0.0, b1, b2).eval(x);
    const real c = exact - series;
    std::lock_guard<std::mutex> lk(g2_mutex);
    g2_cache[{b1, b2}] = c;
    return c;
}

real barnes_gamma2(real x, real b1, real b2) {
    if (x <= 0.0) throw DomainError("barnes_gamma2: x > 0 required");
    if (b1 <= 0.0 || b2 <= 0.0) throw DomainError("barnes_gamma2: scales must be positive");
    const real xbig = std::max(200.0, 200.0 * b1);
    int m = 0;
    if (x < xbig) m = static_cast<int>(std::ceil((xbig - x) / b2));
    // climb: ln G2(x) = ln G2(x + m b2) - sum of step increments
    KahanSum steps;
    const real lb1 = std::log(b1);
    for (int j = 0; j < m; ++j) {
        real y = x + j * b2;
        steps.add(0.5 * std::log(2.0 * PI) + (0.5 - y / b1) * lb1 - std::lgamma(y / b1));
    }
    const real top = lgamma2_series_no_const(1.0, 0.0, b1, b2).eval(x + m * b2) +
                     gamma2_asymptotic_constant(b1, b2);
    return top - steps.value();
}

SelbergAsymptotics selberg_asymptotic(const EdgeSignature& sig, real beta) {
    const real b2h = 0.5 * beta;       // beta/2
    const real b1 = 2.0 / beta;        // Gamma2 scale
    const real c2 = gamma2_asymptotic_constant(b1, 1.0);
    const real lgb = std::log(b2h);
    AsymptoticSeries s;

    if (sig.lo > 0 && sig.hi > 0) {
        s.b(-2) += -beta / 4.0;
        s.b(-1) += b2h / 2.0 - 0.5;
        s.a(-1) += b2h * lgb + std::log(2.0 * PI) - std::lgamma(1.0 + b2h);
        s += lgamma_series(1.0, 1.0);
        s -= lgamma2_series_no_const(1.0, 1.0, b1, 1.0);
        s.a(0) -= c2;
    } else if (sig.lo != sig.hi) {
        s.b(-2) += -b2h;
        s.b(-1) += b2h - 1.0;
        s.a(-1) += beta * lgb + std::log(2.0 * PI) - std::lgamma(1.0 + b2h);
        s += 2.0 * lgamma_series(1.0, 1.0);
        s -= lgamma_series(b2h, 1.0);
        s -= 2.0 * lgamma2_series_no_const(1.0, 1.0, b1, 1.0);
        s.a(0) -= 2.0 * c2;
    } else {
        s.a(-2) += beta * std::log(2.0);
        s.a(-1) += (2.0 - beta) * std::log(2.0) + 3.0 * b2h * lgb + std::log(2.0 * PI) -
                   std::lgamma(1.0 + b2h);
        s += lgamma_series(1.0, b1 - 1.0);   // Gamma(2/beta + N - 1)
        s += lgamma_series(1.0, -1.0);       // Gamma(N - 1)
        s -= lgamma_series(2.0, b1 - 1.0);   // Gamma(2/beta + 2N - 1)
        s -= lgamma_series(2.0, -1.0);       // Gamma(2N - 1)
        s += 3.0 * lgamma_series(1.0, 1.0);  // Gamma(N + 1)^3
        s -= 2.0 * lgamma_series(b2h, 1.0);  // Gamma(1 + N beta/2)^2
        s += lgamma2_series_no_const(2.0, -1.0, b1, 1.0);
        s -= 3.0 * lgamma2_series_no_const(1.0, 1.0, b1, 1.0);
        s -= lgamma2_series_no_const(1.0, -1.0, b1, 1.0);
        s.a(0) += (1.0 - 3.0 - 1.0) * c2;
    }

    // internal consistency: no N^2 lnN term, no lnN in the 1/N tail
    if (std::abs(s.b(-2)) > 1e-10) throw AccuracyError("selberg_asymptotic: N^2 lnN mismatch");
    for (int k = 1; k <= 4; ++k)
        if (std::abs(s.b(k)) > 1e-10) throw AccuracyError("selberg_asymptotic: stray log tail");

    SelbergAsymptotics out;
    out.n2 = s.a(-2);
    out.n_log = s.b(-1);
    out.n1 = s.a(-1);
    out.log_coeff = s.b(0);
    out.constant = s.a(0);
    for (int k = 1; k <= 4; ++k) out.tail[k - 1] = s.a(k);
    out.series = s;
    return out;
}

}  // namespace loggas
