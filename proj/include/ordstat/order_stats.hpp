#ifndef ORDSTAT_ORDER_STATS_HPP
#define ORDSTAT_ORDER_STATS_HPP

// Expected order statistics and the gap / second-difference integrals that
// drive the shape certification, all computed in quantile space u = F(x).

#include "ordstat/distribution.hpp"

#include <utility>

namespace ordstat {

enum class Side { Bottom, Top };

// Index of the addressed order statistic counted from the smallest:
// Bottom fixes k itself, Top fixes the k-th from the largest.
inline int bottom_index(Side side, int k, int n) {
    return side == Side::Bottom ? k : n - k + 1;
}

// E[k-th smallest of n i.i.d. draws].  Throws NoMomentError when the
// expectation does not exist and NumericalError when quadrature fails.
double expected_order_stat(const Distribution& dist, int k, int n);

// Exact expectation for Pareto(a, v) via the log-gamma closed form,
// valid when (n - k + 1) v > 1.
double pareto_closed_form(double a, double v, int k, int n);

// First differences in the sample size, as single integrals:
//   bottom_gap(k, n) = E[k:n] - E[k:n+1]            (>= 0 for every F)
//   top_gap(k, n)    = E[n-k+1:n] - E[n-k:n-1]      (>= 0 for every F)
// top_gap requires n >= k + 1.
double bottom_gap(const Distribution& dist, int k, int n);
double top_gap(const Distribution& dist, int k, int n);

// Second differences in the sample size, as single integrals:
//   bottom_second_difference(k, n) = E[k:n] - 2 E[k:n+1] + E[k:n+2]
//   top_second_difference(k, n)    = top_gap(k, n+1) - top_gap(k, n)
// top_second_difference requires n >= k + 1.
double bottom_second_difference(const Distribution& dist, int k, int n);
double top_second_difference(const Distribution& dist, int k, int n);

// Certificate integrals behind the shape results.  Both are integrals of the
// corresponding curvature kernel against dF; their sign is what certifies
// convexity (bottom) or concavity (top):
//   bottom_kernel_tail_integral(k, n, t) >= 0 for every continuous F and t,
//   top_kernel_head_integral(k, n, t)   <= 0 likewise.
// t = -inf (resp. +inf) gives the full-range value, which is
// distribution-free.
double bottom_kernel_tail_integral(const Distribution& dist, int k, int n, double t);
double top_kernel_head_integral(const Distribution& dist, int k, int n, double t);

// Points where the sign of the second-difference integrands flips:
// F(x_star) = (k-1)/(n+1) and F(x_dagger) = (n-k+1)/n.  Probability levels of
// 0 / 1 map to the support endpoints (infinite endpoints are reported as
// -inf / +inf).
std::pair<double, double> sign_change_points(const Distribution& dist, int k, int n);

namespace kernels {

// Linear brackets whose sign determines the sign of the second-difference
// integrands: negative below the matching sign-change point, positive above.
inline double bottom_curvature_bracket(int k, int n, double u) {
    return ((n + 1.0) * u - (k - 1.0)) / (n - k + 2.0);
}
inline double top_curvature_bracket(int k, int n, double w) {
    return ((k - 1.0) - n * w) / (n - k + 1.0);
}

}  // namespace kernels

}  // namespace ordstat

#endif
