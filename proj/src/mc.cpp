#include "ordstat/mc.hpp"

#include "ordstat/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace ordstat {

namespace detail {

namespace {
// SplitMix64 finalizer over a counter: a keyed, stateless 64-bit stream.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace

double unit_draw(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t x = mix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
    // 53 mantissa bits, offset by half an ulp: strictly inside (0,1).
    return (static_cast<double>(x >> 11) + 0.5) * 0x1.0p-53;
}

}  // namespace detail

namespace {

struct Accumulator {
    long long count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++count;
        const double d = x - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (x - mean);
    }

    Estimate finish() const {
        Estimate e;
        e.mean = mean;
        e.trials = count;
        e.std_error = count > 1
                          ? std::sqrt(m2 / (static_cast<double>(count) - 1.0) /
                                      static_cast<double>(count))
                          : std::numeric_limits<double>::quiet_NaN();
        return e;
    }
};

void check_cfg(const SimConfig& cfg) {
    if (cfg.trials < 1) throw DomainError("simulation requires trials >= 1");
}

}  // namespace

Estimate sim_order_stat(const Distribution& dist, int k, int n, SimConfig cfg) {
    check_cfg(cfg);
    if (k < 1 || n < k) throw DomainError("sim_order_stat requires 1 <= k <= n");
    const MomentExistence me = dist.moment_existence(k, n);
    if (!me.exists) throw NoMomentError(me.reason);

    std::vector<double> draws(static_cast<size_t>(n));
    Accumulator acc;
    for (long long t = 0; t < cfg.trials; ++t) {
        const std::uint64_t base = static_cast<std::uint64_t>(t) *
                                   static_cast<std::uint64_t>(n);
        for (int j = 0; j < n; ++j) {
            const double u = detail::unit_draw(cfg.seed, base + j);
            draws[static_cast<size_t>(j)] = dist.quantile2(u, 1.0 - u);
        }
        std::nth_element(draws.begin(), draws.begin() + (k - 1), draws.end());
        acc.add(draws[static_cast<size_t>(k) - 1]);
    }
    return acc.finish();
}

Estimate sim_reserve_revenue(const Distribution& dist, double r, int n,
                             SimConfig cfg) {
    check_cfg(cfg);
    if (n < 2) throw DomainError("sim_reserve_revenue requires n >= 2");
    if (dist.support_min() < 0.0)
        throw DomainError("sim_reserve_revenue requires support within [0, inf)");

    Accumulator acc;
    for (long long t = 0; t < cfg.trials; ++t) {
        const std::uint64_t base = static_cast<std::uint64_t>(t) *
                                   static_cast<std::uint64_t>(n);
        double top = -std::numeric_limits<double>::infinity();
        double second = top;
        for (int j = 0; j < n; ++j) {
            const double u = detail::unit_draw(cfg.seed, base + j);
            const double x = dist.quantile2(u, 1.0 - u);
            if (x > top) {
                second = top;
                top = x;
            } else if (x > second) {
                second = x;
            }
        }
        double revenue = 0.0;
        if (r <= second)
            revenue = second;
        else if (r <= top)
            revenue = r;
        acc.add(revenue);
    }
    return acc.finish();
}

}  // namespace ordstat
