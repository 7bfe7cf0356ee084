#include "ordstat/shape.hpp"

#include "ordstat/errors.hpp"

#include <cmath>
#include <sstream>

namespace ordstat {

ShapeReport sequence(const Distribution& dist, int k, Side side, int n_min,
                     int n_max) {
    if (k < 1 || n_min < k || n_max < n_min) {
        std::ostringstream os;
        os << "sequence requires 1 <= k <= n_min <= n_max, got k=" << k
           << ", n range [" << n_min << ", " << n_max << "]";
        throw DomainError(os.str());
    }
    for (int n = n_min; n <= n_max; ++n) {
        const MomentExistence me = dist.moment_existence(bottom_index(side, k, n), n);
        if (!me.exists) throw NoMomentError(me.reason);
    }

    ShapeReport rep;
    rep.k = k;
    rep.side = side;
    rep.n_min = n_min;
    rep.n_max = n_max;

    double scale = 0.0;
    for (int n = n_min; n <= n_max; ++n) {
        const double mu = expected_order_stat(dist, bottom_index(side, k, n), n);
        rep.values.push_back(mu);
        scale = std::max(scale, std::fabs(mu));
    }
    rep.tolerance = 1e-7 * std::max(1.0, scale);

    for (size_t i = 0; i + 1 < rep.values.size(); ++i)
        rep.first_diffs.push_back(rep.values[i + 1] - rep.values[i]);
    for (size_t i = 0; i + 1 < rep.first_diffs.size(); ++i)
        rep.second_diffs.push_back(rep.first_diffs[i + 1] - rep.first_diffs[i]);

    const double tol = rep.tolerance;
    bool noninc = true, nondec = true, convex = true, concave = true;
    for (double d : rep.first_diffs) {
        if (d > tol) noninc = false;
        if (d < -tol) nondec = false;
    }
    for (double s : rep.second_diffs) {
        if (s < -tol) convex = false;
        if (s > tol) concave = false;
    }

    // When both directions hold (flat or short sequences), report the side's
    // canonical verdict.
    if (side == Side::Bottom) {
        rep.monotone = noninc ? SequenceTrend::NonIncreasing
                              : (nondec ? SequenceTrend::NonDecreasing
                                        : SequenceTrend::Neither);
        rep.curvature = convex ? Curvature::Convex
                               : (concave ? Curvature::Concave : Curvature::Neither);
    } else {
        rep.monotone = nondec ? SequenceTrend::NonDecreasing
                              : (noninc ? SequenceTrend::NonIncreasing
                                        : SequenceTrend::Neither);
        rep.curvature = concave ? Curvature::Concave
                               : (convex ? Curvature::Convex : Curvature::Neither);
    }

    // Violations of the side's canonical shape, anchored at the sample size
    // of the offending step (monotonicity) or the centre point (curvature).
    for (size_t i = 0; i < rep.first_diffs.size(); ++i) {
        const double d = rep.first_diffs[i];
        const bool bad = side == Side::Bottom ? d > tol : d < -tol;
        if (bad) rep.violations.push_back({n_min + static_cast<int>(i) + 1, d});
    }
    for (size_t i = 0; i < rep.second_diffs.size(); ++i) {
        const double s = rep.second_diffs[i];
        const bool bad = side == Side::Bottom ? s < -tol : s > tol;
        if (bad) rep.violations.push_back({n_min + static_cast<int>(i) + 1, s});
    }
    return rep;
}

GapConsistency gap_consistency(const Distribution& dist, int k, Side side, int n) {
    GapConsistency out{};
    if (side == Side::Bottom) {
        out.direct = expected_order_stat(dist, k, n) -
                     expected_order_stat(dist, k, n + 1);
        out.identity = bottom_gap(dist, k, n);
    } else {
        out.direct = expected_order_stat(dist, n - k + 2, n + 1) -
                     expected_order_stat(dist, n - k + 1, n);
        out.identity = top_gap(dist, k, n + 1);
    }
    out.abs_err = std::fabs(out.direct - out.identity);
    return out;
}

const char* to_string(SequenceTrend t) {
    switch (t) {
        case SequenceTrend::NonIncreasing: return "NonIncreasing";
        case SequenceTrend::NonDecreasing: return "NonDecreasing";
        case SequenceTrend::Neither: return "Neither";
    }
    return "?";
}

const char* to_string(Curvature c) {
    switch (c) {
        case Curvature::Convex: return "Convex";
        case Curvature::Concave: return "Concave";
        case Curvature::Neither: return "Neither";
    }
    return "?";
}

const char* to_string(Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return "Increasing";
        case Monotonicity::Decreasing: return "Decreasing";
        case Monotonicity::Constant: return "Constant";
        case Monotonicity::NonMonotone: return "NonMonotone";
    }
    return "?";
}

}  // namespace ordstat
