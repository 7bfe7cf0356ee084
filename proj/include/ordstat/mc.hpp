#ifndef ORDSTAT_MC_HPP
#define ORDSTAT_MC_HPP

// Seeded Monte-Carlo ground truth for the quadrature-computed expectations.
// Sampling is inverse-transform through the quantile function, so the
// estimates share no integration code with the quadrature path.

#include "ordstat/distribution.hpp"

#include <cstdint>

namespace ordstat {

struct SimConfig {
    long long trials = 1'000'000;
    std::uint64_t seed = 0;
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;  // NaN when trials < 2
    long long trials = 0;
};

// Draws n values per trial, selects the k-th smallest, averages.
// Deterministic in (seed, trials, k, n): draw j of trial t consumes stream
// index t*n + j, so any fixed partition of trials reproduces the same values.
Estimate sim_order_stat(const Distribution& dist, int k, int n, SimConfig cfg);

// Simulates the reserve-price revenue rule: the second-highest draw when it
// clears r, r when only the highest does, zero otherwise.
Estimate sim_reserve_revenue(const Distribution& dist, double r, int n,
                             SimConfig cfg);

namespace detail {
// Counter-based uniform stream on (0,1): value at `index` for a given seed,
// independent of call order.
double unit_draw(std::uint64_t seed, std::uint64_t index);
}  // namespace detail

}  // namespace ordstat

#endif
