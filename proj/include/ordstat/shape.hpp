#ifndef ORDSTAT_SHAPE_HPP
#define ORDSTAT_SHAPE_HPP

// Sequences of expected order statistics over a range of sample sizes, with
// discrete monotonicity/curvature verdicts at an explicit tolerance.

#include "ordstat/distribution.hpp"
#include "ordstat/order_stats.hpp"

#include <vector>

namespace ordstat {

enum class SequenceTrend { NonIncreasing, NonDecreasing, Neither };
enum class Curvature { Convex, Concave, Neither };

struct ShapeViolation {
    int n;             // sample size the violating difference is anchored at
    double magnitude;  // signed value of the offending difference
};

struct ShapeReport {
    int k = 0;
    Side side = Side::Bottom;
    int n_min = 0;
    int n_max = 0;
    std::vector<double> values;        // length n_max - n_min + 1
    std::vector<double> first_diffs;   // length len - 1
    std::vector<double> second_diffs;  // length len - 2
    SequenceTrend monotone = SequenceTrend::Neither;
    Curvature curvature = Curvature::Neither;
    double tolerance = 0.0;
    // Departures from the side's canonical shape (non-increasing convex for
    // Bottom, non-decreasing concave for Top).
    std::vector<ShapeViolation> violations;
};

// Evaluates E at every n in [n_min, n_max] (Bottom: k-th smallest; Top: k-th
// largest) and certifies the shape.  tolerance = 1e-7 * max(1, max |value|).
ShapeReport sequence(const Distribution& dist, int k, Side side, int n_min,
                     int n_max);

// Forward gap at n both ways: as a direct difference of expectations and as
// the single-integral identity.
struct GapConsistency {
    double direct;
    double identity;
    double abs_err;
};
GapConsistency gap_consistency(const Distribution& dist, int k, Side side, int n);

const char* to_string(SequenceTrend t);
const char* to_string(Curvature c);
const char* to_string(Monotonicity m);

}  // namespace ordstat

#endif
