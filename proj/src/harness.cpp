#include "loggas/harness.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "loggas/quadrature.hpp"

namespace loggas {

void ChainConfig::validate(const Domain& d) const {
    if (n <= 0 || steps <= 0 || burn_in < 0 || steps <= burn_in)
        throw ConfigError("chain config: need steps > burn_in >= 0 and n > 0");
    if (beta <= 0.0) throw ConfigError("chain config: beta must be positive");
    if (fixed_filling) {
        if (fixed_filling->size() != d.count())
            throw ConfigError("fixed_filling length must match segment count");
        long tot = 0;
        for (int c : *fixed_filling) {
            if (c < 0) throw ConfigError("fixed_filling entries must be nonnegative");
            tot += c;
        }
        if (tot != n) throw ConfigError("fixed_filling must sum to n");
    }
}

namespace {

struct Chain {
    std::vector<real> lam;
    std::vector<int> seg;
    real step;
    long accepted = 0, proposed = 0, crossings = 0;
};

int segment_of(const Domain& d, real x) {
    for (std::size_t h = 0; h < d.count(); ++h)
        if (d.segments[h].contains(x)) return static_cast<int>(h);
    return -1;
}

void run_chain(const AnalyticPotential& p, const Domain& d, const ChainConfig& cfg,
               int chain_id, std::vector<std::vector<real>>& out, long thin, Chain& st) {
    CounterRng rng(cfg.seed, static_cast<std::uint64_t>(chain_id) + 1);
    const real n_inv = 1.0 / cfg.n;
    const real half_beta_n = 0.5 * cfg.beta * cfg.n;

    // deterministic initial spread
    st.lam.resize(cfg.n);
    st.seg.resize(cfg.n);
    {
        int i = 0;
        if (cfg.fixed_filling) {
            for (std::size_t h = 0; h < d.count(); ++h) {
                int c = (*cfg.fixed_filling)[h];
                for (int j = 0; j < c; ++j, ++i) {
                    st.lam[i] = d.segments[h].lo + d.segments[h].length() * (j + 1.0) / (c + 1.0);
                    st.seg[i] = static_cast<int>(h);
                }
            }
        } else {
            for (; i < cfg.n; ++i) {
                std::size_t h = i % d.count();
                int per = cfg.n / static_cast<int>(d.count()) + 1;
                int j = i / static_cast<int>(d.count());
                st.lam[i] = d.segments[h].lo + d.segments[h].length() * (j + 1.0) / (per + 1.0);
                st.seg[i] = static_cast<int>(h);
            }
        }
    }
    st.step = cfg.step_size;

    auto logw = [&](real x) { return -half_beta_n * p.eval(cplx(x), n_inv).real(); };
    std::vector<real> lw(cfg.n);
    for (int i = 0; i < cfg.n; ++i) lw[i] = logw(st.lam[i]);

    long tune_acc = 0, tune_prop = 0;
    for (long sweep = 0; sweep < cfg.steps; ++sweep) {
        for (int i = 0; i < cfg.n; ++i) {
            real prop = st.lam[i] + st.step * rng.normal();
            ++st.proposed;
            ++tune_prop;
            int hs = segment_of(d, prop);
            if (hs < 0) continue;                                  // outside A
            if (cfg.fixed_filling && hs != st.seg[i]) continue;    // sector locked
            real dlog = -half_beta_n * p.eval(cplx(prop), n_inv).real() - lw[i];
            bool ok = true;
            for (int j = 0; j < cfg.n && ok; ++j) {
                if (j == i) continue;
                real num = std::abs(prop - st.lam[j]);
                real den = std::abs(st.lam[i] - st.lam[j]);
                if (num == 0.0) {
                    ok = false;
                    break;
                }
                dlog += cfg.beta * (std::log(num) - std::log(den));
            }
            if (!ok) continue;
            if (dlog >= 0.0 || rng.uniform() < std::exp(dlog)) {
                if (hs != st.seg[i]) ++st.crossings;
                st.lam[i] = prop;
                st.seg[i] = hs;
                lw[i] = logw(prop);
                ++st.accepted;
                ++tune_acc;
            }
        }
        if (sweep < cfg.burn_in) {
            if (tune_prop >= 500l * cfg.n) {
                real rate = static_cast<real>(tune_acc) / tune_prop;
                if (rate < 0.25)
                    st.step *= 0.8;
                else if (rate > 0.35)
                    st.step *= 1.25;
                st.step = std::clamp(st.step, 1e-6, 10.0);
                tune_acc = tune_prop = 0;
            }
        } else if ((sweep - cfg.burn_in) % thin == 0) {
            out.push_back(st.lam);
        }
    }
    if (st.proposed > 0 && static_cast<real>(st.accepted) / st.proposed < 1e-4)
        throw TuningError("sampler acceptance collapsed; reduce step_size");
}

}  // namespace

SampleBatch sample(const AnalyticPotential& p, const Domain& d, const ChainConfig& cfg) {
    cfg.validate(d);
    const long kept_target = 40000;
    long post = cfg.steps - cfg.burn_in;
    long thin = std::max<long>(1, post * cfg.chains / kept_target);

    std::vector<std::vector<std::vector<real>>> per_chain(cfg.chains);
    std::vector<Chain> st(cfg.chains);
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errs(cfg.chains);
    for (int c = 0; c < cfg.chains; ++c) {
        threads.emplace_back([&, c]() {
            try {
                run_chain(p, d, cfg, c, per_chain[c], thin, st[c]);
            } catch (...) {
                errs[c] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);

    SampleBatch b;
    b.n = cfg.n;
    b.beta = cfg.beta;
    b.seed = cfg.seed;
    b.chains = cfg.chains;
    long acc = 0, prop = 0;
    for (int c = 0; c < cfg.chains; ++c) {
        for (auto& s : per_chain[c]) b.configurations.push_back(std::move(s));
        acc += st[c].accepted;
        prop += st[c].proposed;
        b.crossings += st[c].crossings;
    }
    b.acceptance_rate = prop ? static_cast<real>(acc) / prop : 0.0;
    return b;
}

namespace {

constexpr int JK_BATCHES = 50;

Statistic jackknife_mean(const std::vector<real>& vals) {
    std::size_t n = vals.size();
    if (n == 0) throw DomainError("empty sample batch");
    int B = std::min<std::size_t>(JK_BATCHES, n);
    std::vector<real> bm(B, 0.0);
    std::vector<long> bc(B, 0);
    for (std::size_t t = 0; t < n; ++t) {
        int bidx = static_cast<int>(t * B / n);
        bm[bidx] += vals[t];
        ++bc[bidx];
    }
    real tot = 0.0;
    for (int i = 0; i < B; ++i) tot += bm[i];
    real mean = tot / n;
    real var = 0.0;
    for (int i = 0; i < B; ++i) {
        real loo = (tot - bm[i]) / (n - bc[i]);
        var += (loo - mean) * (loo - mean);
    }
    var *= static_cast<real>(B - 1) / B;
    Statistic s;
    s.mean = mean;
    s.std_error = std::sqrt(var);
    return s;
}

Statistic jackknife_variance(const std::vector<real>& vals) {
    std::size_t n = vals.size();
    if (n < 4) throw DomainError("too few samples for a variance estimate");
    int B = std::min<std::size_t>(JK_BATCHES, n);
    std::vector<real> s1(B, 0.0), s2(B, 0.0);
    std::vector<long> bc(B, 0);
    for (std::size_t t = 0; t < n; ++t) {
        int bidx = static_cast<int>(t * B / n);
        s1[bidx] += vals[t];
        s2[bidx] += vals[t] * vals[t];
        ++bc[bidx];
    }
    real t1 = 0.0, t2 = 0.0;
    long tc = 0;
    for (int i = 0; i < B; ++i) {
        t1 += s1[i];
        t2 += s2[i];
        tc += bc[i];
    }
    auto var_of = [](real sum1, real sum2, long cnt) {
        real m = sum1 / cnt;
        return sum2 / cnt - m * m;
    };
    real full = var_of(t1, t2, tc);
    real var = 0.0;
    for (int i = 0; i < B; ++i) {
        real loo = var_of(t1 - s1[i], t2 - s2[i], tc - bc[i]);
        var += (loo - full) * (loo - full);
    }
    var *= static_cast<real>(B - 1) / B;
    Statistic s;
    s.mean = full;
    s.std_error = std::sqrt(var);
    return s;
}

}  // namespace

Statistic estimate_linear_stat(const SampleBatch& b, const std::function<real(real)>& phi) {
    std::vector<real> vals;
    vals.reserve(b.configurations.size());
    for (const auto& c : b.configurations) {
        real s = 0.0;
        for (real x : c) s += phi(x);
        vals.push_back(s);
    }
    return jackknife_mean(vals);
}

Statistic estimate_linear_stat_variance(const SampleBatch& b,
                                        const std::function<real(real)>& phi) {
    std::vector<real> vals;
    vals.reserve(b.configurations.size());
    for (const auto& c : b.configurations) {
        real s = 0.0;
        for (real x : c) s += phi(x);
        vals.push_back(s);
    }
    return jackknife_variance(vals);
}

Statistic estimate_moment(const SampleBatch& b, int k) {
    std::vector<real> vals;
    vals.reserve(b.configurations.size());
    for (const auto& c : b.configurations) {
        real s = 0.0;
        for (real x : c) s += std::pow(x, k);
        vals.push_back(s / b.n);
    }
    return jackknife_mean(vals);
}

std::map<std::vector<int>, real> estimate_filling_histogram(const SampleBatch& b,
                                                            const Domain& d) {
    std::map<std::vector<int>, long> counts;
    for (const auto& c : b.configurations) {
        std::vector<int> key(d.count(), 0);
        for (real x : c) {
            int h = segment_of(d, x);
            if (h >= 0) ++key[h];
        }
        key.erase(key.begin());  // segment 0 count implied by the rest
        ++counts[key];
    }
    std::map<std::vector<int>, real> hist;
    for (auto& [k, v] : counts)
        hist[k] = static_cast<real>(v) / static_cast<real>(b.configurations.size());
    return hist;
}

Statistic expected_char_poly(const SampleBatch& b, real x, bool odd_variant) {
    std::vector<real> vals;
    vals.reserve(b.configurations.size());
    for (const auto& c : b.configurations) {
        real p = 1.0, s = 0.0;
        for (real l : c) {
            p *= (x - l);
            s += l;
        }
        vals.push_back(odd_variant ? (x + s) * p : p);
    }
    Statistic st = jackknife_mean(vals);
    st.noisy = std::abs(st.std_error) > 0.5 * std::abs(st.mean);
    return st;
}

// ------------------------------------------------------------ quadrature

namespace {

struct OrderedIntegrand {
    const AnalyticPotential* p;
    const Domain* d;
    int n;
    real beta, n_inv, half_beta_n;
    real rel_tol;
    const std::vector<int>* filling = nullptr;  // per-particle segment, ordered

    real weight(real x) const { return std::exp(-half_beta_n * p->eval(cplx(x), n_inv).real()); }

    // integrate over particle `level` (0-based) with positions below fixed
    real integrate_level(int level, real lower, const std::vector<real>& fixed) const {
        real level_tol = rel_tol / (2.0 * n);
        auto body = [&](real x) -> real {
            real f = weight(x);
            for (real y : fixed) f *= std::pow(x - y, beta);
            if (level + 1 == n) return f;
            std::vector<real> fx = fixed;
            fx.push_back(x);
            return f * integrate_level(level + 1, x, fx);
        };
        real total = 0.0;
        if (filling) {
            int h = (*filling)[level];
            const Segment& s = d->segments[h];
            real a = std::max(lower, s.lo);
            if (a < s.hi)
                total += integrate_adaptive(body, a, s.hi, 0.0, level_tol);
        } else {
            for (const auto& s : d->segments) {
                real a = std::max(lower, s.lo);
                if (a < s.hi) total += integrate_adaptive(body, a, s.hi, 0.0, level_tol);
            }
        }
        return total;
    }
};

}  // namespace

real partition_quadrature(const AnalyticPotential& p, const Domain& d, int n, real beta,
                          real rel_tol, const std::optional<std::vector<int>>& fixed_filling) {
    if (n < 1 || n > 4) throw DomainError("partition_quadrature handles 1 <= N <= 4 only");
    OrderedIntegrand oi;
    oi.p = &p;
    oi.d = &d;
    oi.n = n;
    oi.beta = beta;
    oi.n_inv = 1.0 / n;
    oi.half_beta_n = 0.5 * beta * n;
    oi.rel_tol = rel_tol;

    std::vector<int> assign;
    real log_mult = 0.0;
    if (fixed_filling) {
        if (fixed_filling->size() != d.count())
            throw ConfigError("fixed_filling length must match segment count");
        long tot = 0;
        for (std::size_t h = 0; h < d.count(); ++h) {
            for (int j = 0; j < (*fixed_filling)[h]; ++j) assign.push_back(static_cast<int>(h));
            tot += (*fixed_filling)[h];
            log_mult += std::lgamma((*fixed_filling)[h] + 1.0);
        }
        if (tot != n) throw ConfigError("fixed_filling must sum to N");
        oi.filling = &assign;
    } else {
        log_mult = std::lgamma(n + 1.0);
    }
    real val = oi.integrate_level(0, -std::numeric_limits<real>::infinity(), {});
    if (!(val > 0.0) || !std::isfinite(val))
        throw AccuracyError("partition quadrature produced a non-positive value");
    return std::log(val) + log_mult;
}

// ------------------------------------------------------ grid equilibrium

real GridMeasure::moment(int k) const {
    real s = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * std::pow(nodes[i], k);
    return s;
}

std::vector<Segment> GridMeasure::support_estimate(real threshold) const {
    std::vector<Segment> out;
    real per_node = 1.0 / static_cast<real>(nodes.size());
    bool in_run = false;
    real lo = 0.0, hi = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        bool on = weights[i] > threshold * per_node;
        bool contiguous =
            in_run && i > 0 && (nodes[i] - nodes[i - 1]) < 2.0 * (node_widths[i] + node_widths[i - 1]);
        if (on && (!in_run || !contiguous)) {
            if (in_run) out.emplace_back(lo, hi);
            lo = nodes[i] - 0.5 * node_widths[i];
            hi = nodes[i] + 0.5 * node_widths[i];
            in_run = true;
        } else if (on) {
            hi = nodes[i] + 0.5 * node_widths[i];
        } else if (in_run) {
            out.emplace_back(lo, hi);
            in_run = false;
        }
    }
    if (in_run) out.emplace_back(lo, hi);
    return out;
}

GridMeasure grid_equilibrium(const AnalyticPotential& p, const Domain& d,
                             const std::vector<real>& eps, int nodes_per_segment) {
    if (nodes_per_segment < 50) throw ConfigError("grid_equilibrium: use at least 50 nodes/segment");
    if (eps.size() != d.count()) throw ConfigError("grid_equilibrium: eps size mismatch");
    const int S = static_cast<int>(d.count());
    const int n = nodes_per_segment * S;

    GridMeasure gm;
    gm.nodes.resize(n);
    gm.node_widths.resize(n);
    std::vector<int> seg_of(n);
    for (int h = 0; h < S; ++h) {
        real dx = d.segments[h].length() / nodes_per_segment;
        for (int j = 0; j < nodes_per_segment; ++j) {
            int i = h * nodes_per_segment + j;
            gm.nodes[i] = d.segments[h].lo + (j + 0.5) * dx;
            gm.node_widths[i] = dx;
            seg_of[i] = h;
        }
    }

    Vec V(n);
    for (int i = 0; i < n; ++i) V(i) = p.eval(cplx(gm.nodes[i]), 0.0).real();
    Mat L(n, n);
    for (int i = 0; i < n; ++i) {
        // cell self-energy of a uniform block: ln(width) - 3/2
        L(i, i) = std::log(gm.node_widths[i]) - 1.5;
        for (int j = i + 1; j < n; ++j)
            L(i, j) = L(j, i) = std::log(std::abs(gm.nodes[i] - gm.nodes[j]));
    }

    // Minimize V.w - w.L.w with per-segment masses and w >= 0.
    // Active-set on the KKT system; drops negative nodes, re-admits nodes
    // whose dual residual goes negative.
    std::vector<bool> active(n, true);
    Vec w = Vec::Zero(n);
    Vec lambda = Vec::Zero(S);
    for (int iter = 0; iter < 60; ++iter) {
        std::vector<int> idx;
        for (int i = 0; i < n; ++i)
            if (active[i]) idx.push_back(i);
        const int m = static_cast<int>(idx.size());
        // stationarity on the active set: 2 (L w)_a + lambda_h = V_a
        Mat K = Mat::Zero(m + S, m + S);
        Vec rhs = Vec::Zero(m + S);
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b) K(a, b) = 2.0 * L(idx[a], idx[b]);
            K(a, m + seg_of[idx[a]]) = 1.0;
            K(m + seg_of[idx[a]], a) = 1.0;
            rhs(a) = V(idx[a]);
        }
        for (int h = 0; h < S; ++h) rhs(m + h) = eps[h];
        Vec sol = Eigen::PartialPivLU<Mat>(K).solve(rhs);
        w.setZero();
        for (int a = 0; a < m; ++a) w(idx[a]) = sol(a);
        for (int h = 0; h < S; ++h) lambda(h) = sol(m + h);

        // drop negative weights
        bool changed = false;
        for (int a = 0; a < m; ++a)
            if (sol(a) < -1e-14) {
                active[idx[a]] = false;
                changed = true;
            }
        if (changed) continue;
        for (int a = 0; a < m; ++a)
            if (sol(a) < 0.0) w(idx[a]) = 0.0;

        // dual feasibility of the dropped nodes: V - 2 L w - lambda >= 0
        Vec grad = V - 2.0 * L * w;
        int worst = -1;
        real worst_v = -1e-10;
        for (int i = 0; i < n; ++i)
            if (!active[i] && grad(i) - lambda(seg_of[i]) < worst_v) {
                worst_v = grad(i) - lambda(seg_of[i]);
                worst = i;
            }
        if (worst < 0) break;
        active[worst] = true;
    }

    gm.weights.assign(n, 0.0);
    for (int i = 0; i < n; ++i) gm.weights[i] = std::max(0.0, w(i));
    gm.energy = V.dot(w) - w.dot(L * w);
    return gm;
}

}  // namespace loggas
