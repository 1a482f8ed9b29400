#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "loggas/potential.hpp"
#include "loggas/theta.hpp"

namespace loggas {

// Counter-based RNG: every draw is a hash of (seed, stream, counter), so
// replay is deterministic and streams split cleanly across chains.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream) : seed_(seed), stream_(stream) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (seed_ ^ (stream_ * 0x9E3779B97F4A7C15ull)) + (++counter_) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform in (0,1)
    real uniform() { return (next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54; }
    real normal() {
        // Box-Muller; one fresh pair per call keeps the stream stateless
        real u1 = uniform(), u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * PI * u2);
    }
    std::uint64_t counter() const { return counter_; }

private:
    std::uint64_t seed_, stream_, counter_ = 0;
};

struct ChainConfig {
    int n = 16;
    real beta = 2.0;
    long steps = 100000;   // sweeps (one proposal per particle each)
    long burn_in = 10000;
    real step_size = 0.2;  // auto-tuned during burn-in
    std::uint64_t seed = 1;
    int chains = 1;
    std::optional<std::vector<int>> fixed_filling;  // particles per segment

    void validate(const Domain& d) const;
};

struct SampleBatch {
    int n = 0;
    real beta = 2.0;
    std::vector<std::vector<real>> configurations;  // [sample][particle]
    real acceptance_rate = 0.0;
    std::uint64_t seed = 0;
    int chains = 1;
    long crossings = 0;  // segment-change accept count (free mode diagnostic)
};

SampleBatch sample(const AnalyticPotential& p, const Domain& d, const ChainConfig& cfg);

struct Statistic {
    real mean = 0.0;
    real std_error = 0.0;
    bool noisy = false;  // set when the error dominates the estimate
};

// Mean of sum_i phi(lambda_i) with jackknife error over batches.
Statistic estimate_linear_stat(const SampleBatch& b, const std::function<real(real)>& phi);
// Variance of sum_i phi(lambda_i) with jackknife error.
Statistic estimate_linear_stat_variance(const SampleBatch& b, const std::function<real(real)>& phi);
// Mean of N^{-1} sum_i lambda_i^k.
Statistic estimate_moment(const SampleBatch& b, int k);
// Histogram of the per-segment particle counts; key is the count vector of
// segments 1..g (segment 0 implied).
std::map<std::vector<int>, real> estimate_filling_histogram(const SampleBatch& b, const Domain& d);

// Monte Carlo estimate of E[prod_i (x - lambda_i)]; with odd_variant the
// estimator of E[(x + sum lambda_i) prod (x - lambda_i)].
Statistic expected_char_poly(const SampleBatch& b, real x, bool odd_variant = false);

// Brute-force nested quadrature of the log partition function, N <= 4.
real partition_quadrature(const AnalyticPotential& p, const Domain& d, int n, real beta,
                          real rel_tol = 1e-9,
                          const std::optional<std::vector<int>>& fixed_filling = std::nullopt);

// Discrete equilibrium measure by constrained minimization of the lattice
// energy (mass eps_h per segment).
struct GridMeasure {
    std::vector<real> nodes;
    std::vector<real> weights;  // same length; sums to 1
    std::vector<real> node_widths;
    real energy = 0.0;

    real moment(int k) const;
    // support guess: nodes with weight above threshold * (mass per node)
    std::vector<Segment> support_estimate(real threshold = 1e-6) const;
};

GridMeasure grid_equilibrium(const AnalyticPotential& p, const Domain& d,
                             const std::vector<real>& eps, int nodes_per_segment);

}  // namespace loggas
