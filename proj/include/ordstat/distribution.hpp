#ifndef ORDSTAT_DISTRIBUTION_HPP
#define ORDSTAT_DISTRIBUTION_HPP

// Parametric continuous distributions with the density/CDF/quantile/hazard
// interface the rest of the library consumes, plus a numeric monotone-hazard
// classifier.  Instances are immutable; every method is a pure function.

#include <string>
#include <string_view>

namespace ordstat {

enum class Family {
    Uniform,       // lo, hi
    Exponential,   // rate
    Normal,        // mean, stddev
    Weibull,       // shape, scale
    Gamma,         // shape, scale
    Gumbel,        // location, scale
    Pareto,        // scale a, shape v  (support [a, inf))
    NegatedPareto  // scale a, shape v  (support (-inf, -a], the mirror image)
};

enum class Monotonicity { Increasing, Decreasing, Constant, NonMonotone };

struct MonotonicityVerdict {
    Monotonicity mhr;   // direction of the hazard rate f / (1 - F)
    Monotonicity mrhr;  // direction of the reverse hazard rate f / F
    int grid_size;
    double u_margin;
};

struct MomentExistence {
    bool exists;
    std::string reason;  // empty when the moment exists
};

class Distribution {
public:
    // Spec-string grammar: "family:key=value,key=value", case-insensitive,
    // e.g. "uniform:lo=0,hi=1" or "pareto:a=1,v=0.75".  Unknown or missing
    // keys are errors.  Throws ParseError.
    static Distribution parse(std::string_view spec);

    static Distribution uniform(double lo, double hi);
    static Distribution exponential(double rate);
    static Distribution normal(double mean, double stddev);
    static Distribution weibull(double shape, double scale);
    static Distribution gamma(double shape, double scale);
    static Distribution gumbel(double location, double scale);
    static Distribution pareto(double scale_a, double shape_v);
    static Distribution negated_pareto(double scale_a, double shape_v);

    Family family() const { return family_; }
    double param1() const { return p1_; }
    double param2() const { return p2_; }

    double support_min() const;
    double support_max() const;

    double cdf(double x) const;
    double sf(double x) const;  // survival function 1 - F, tail-accurate
    double pdf(double x) const;

    // Inverse CDF for u in (0,1); throws DomainError otherwise.
    double quantile(double u) const;

    // Same, but with both u and w = 1 - u supplied so that whichever tail is
    // being probed keeps full relative precision.  No argument validation.
    double quantile2(double u, double w) const;

    // f/(1-F) and f/F; throw DomainError where the denominator vanishes.
    double hazard(double x) const;
    double reverse_hazard(double x) const;

    // Samples both hazard rates on a quantile grid
    // u in [u_margin, 1 - u_margin] and reports their direction.
    MonotonicityVerdict classify(int grid_size = 512, double u_margin = 1e-4) const;

    // Whether the expectation of the k-th smallest of n draws exists.
    // Among the built-in families, only the Pareto pair can fail.
    MomentExistence moment_existence(int k, int n) const;

    std::string describe() const;

private:
    Distribution(Family f, double p1, double p2) : family_(f), p1_(p1), p2_(p2) {}
    void validate() const;

    Family family_;
    double p1_;
    double p2_;
};

}  // namespace ordstat

#endif
