#ifndef ORDSTAT_H
#define ORDSTAT_H

/*
 * ordstat -- expected order statistics, hazard-class shape certification,
 * and auction design with recruiting costs and reserve prices.
 *
 * C interface to the shared library.  All objects are opaque handles created
 * and destroyed here; all fallible calls return an ordstat_status, with
 * results written through out-pointers.  A human-readable message for the
 * most recent failure on the calling thread is available from
 * ordstat_last_error().
 *
 * Unless stated otherwise, functions are pure: given the same handle and
 * arguments they return the same bits, and handles may be shared freely
 * across threads once constructed.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ORDSTAT_API __declspec(dllexport)
#else
#define ORDSTAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ordstat_dist ordstat_dist;
typedef struct ordstat_cost ordstat_cost;

typedef enum ordstat_status {
    ORDSTAT_OK = 0,
    ORDSTAT_ERR_INVALID = 1,   /* bad arguments or spec-string parse failure */
    ORDSTAT_ERR_DOMAIN = 2,    /* argument outside the operation's domain */
    ORDSTAT_ERR_NO_MOMENT = 3, /* the requested expectation does not exist */
    ORDSTAT_ERR_NUMERIC = 4,   /* quadrature failed to converge */
    ORDSTAT_ERR_BOUNDARY = 5   /* optimizer still improving at n_max */
} ordstat_status;

/* Sides of an order-statistic query: BOTTOM addresses the k-th smallest,
 * TOP the k-th largest. */
#define ORDSTAT_SIDE_BOTTOM 0
#define ORDSTAT_SIDE_TOP 1

/* Hazard-rate direction verdicts. */
#define ORDSTAT_MONO_INCREASING 0
#define ORDSTAT_MONO_DECREASING 1
#define ORDSTAT_MONO_CONSTANT 2
#define ORDSTAT_MONO_NONMONOTONE 3

/* Sequence trend verdicts. */
#define ORDSTAT_TREND_NONINCREASING 0
#define ORDSTAT_TREND_NONDECREASING 1
#define ORDSTAT_TREND_NEITHER 2

/* Curvature verdicts. */
#define ORDSTAT_CURV_CONVEX 0
#define ORDSTAT_CURV_CONCAVE 1
#define ORDSTAT_CURV_NEITHER 2

/* Conditional order-statistic kinds (see ordstat_conditional_lower_os). */
#define ORDSTAT_COND_MAX_OF_N 0
#define ORDSTAT_COND_SECOND_OF_N 1

ORDSTAT_API const char* ordstat_version(void);
ORDSTAT_API const char* ordstat_strerror(ordstat_status status);

/* Message for the last failing call on this thread; valid until the next
 * failing call on the same thread.  Never NULL. */
ORDSTAT_API const char* ordstat_last_error(void);

/* ---------------------------------------------------------------------------
 * Distributions
 *
 * Spec-string grammar: "family:key=value,key=value" (case-insensitive).
 * Families and keys:
 *   uniform:lo=,hi=          exponential:rate=      normal:mean=,stddev=
 *   weibull:shape=,scale=    gamma:shape=,scale=    gumbel:location=,scale=
 *   pareto:a=,v=             negatedpareto:a=,v=
 * ------------------------------------------------------------------------- */

ORDSTAT_API ordstat_status ordstat_dist_parse(const char* spec, ordstat_dist** out);
ORDSTAT_API void ordstat_dist_free(ordstat_dist* dist);

/* Canonical spec string for the handle (static per handle). */
ORDSTAT_API const char* ordstat_dist_describe(const ordstat_dist* dist);

ORDSTAT_API void ordstat_dist_support(const ordstat_dist* dist, double* lo,
                                      double* hi);

/* Total on the reals: 0/1 outside the support. */
ORDSTAT_API double ordstat_dist_cdf(const ordstat_dist* dist, double x);
ORDSTAT_API double ordstat_dist_pdf(const ordstat_dist* dist, double x);

ORDSTAT_API ordstat_status ordstat_dist_quantile(const ordstat_dist* dist,
                                                 double u, double* out);
ORDSTAT_API ordstat_status ordstat_dist_hazard(const ordstat_dist* dist, double x,
                                               double* out);
ORDSTAT_API ordstat_status ordstat_dist_reverse_hazard(const ordstat_dist* dist,
                                                       double x, double* out);

/* Samples both hazard rates on a quantile grid and reports their direction
 * as ORDSTAT_MONO_* values.  Pass grid_size <= 0 or u_margin <= 0 for the
 * defaults (512 and 1e-4). */
ORDSTAT_API ordstat_status ordstat_dist_classify(const ordstat_dist* dist,
                                                 int grid_size, double u_margin,
                                                 int* mhr, int* mrhr);

/* 1 when E[k-th smallest of n] exists, 0 otherwise. */
ORDSTAT_API int ordstat_moment_exists(const ordstat_dist* dist, int k, int n);

/* ---------------------------------------------------------------------------
 * Expected order statistics and shape machinery
 * ------------------------------------------------------------------------- */

/* E[k-th smallest of n i.i.d. draws]. */
ORDSTAT_API ordstat_status ordstat_expected_order_stat(const ordstat_dist* dist,
                                                       int k, int n, double* out);

/* Exact Pareto(a, v) expectation via the log-gamma closed form. */
ORDSTAT_API ordstat_status ordstat_pareto_closed_form(double a, double v, int k,
                                                      int n, double* out);

/* First differences in n as single integrals:
 *   bottom_gap = E[k:n] - E[k:n+1]
 *   top_gap    = E[n-k+1:n] - E[n-k:n-1]   (requires n >= k+1)            */
ORDSTAT_API ordstat_status ordstat_bottom_gap(const ordstat_dist* dist, int k,
                                              int n, double* out);
ORDSTAT_API ordstat_status ordstat_top_gap(const ordstat_dist* dist, int k, int n,
                                           double* out);

/* Second differences in n as single integrals:
 *   bottom: E[k:n] - 2 E[k:n+1] + E[k:n+2]
 *   top:    top_gap(k, n+1) - top_gap(k, n) (requires n >= k+1)           */
ORDSTAT_API ordstat_status ordstat_bottom_second_difference(
    const ordstat_dist* dist, int k, int n, double* out);
ORDSTAT_API ordstat_status ordstat_top_second_difference(const ordstat_dist* dist,
                                                         int k, int n, double* out);

/* Certificate integrals: the tail (from t) integral of the bottom curvature
 * kernel against dF is nonnegative for every continuous distribution, and
 * the head (up to t) integral of the top kernel is nonpositive.  Pass
 * -INFINITY / +INFINITY for the distribution-free full-range values. */
ORDSTAT_API ordstat_status ordstat_bottom_kernel_tail_integral(
    const ordstat_dist* dist, int k, int n, double t, double* out);
ORDSTAT_API ordstat_status ordstat_top_kernel_head_integral(
    const ordstat_dist* dist, int k, int n, double t, double* out);

/* Quantiles at the sign-change levels (k-1)/(n+1) and (n-k+1)/n; levels of
 * 0 / 1 map to the support endpoints (+-infinity when unbounded). */
ORDSTAT_API ordstat_status ordstat_sign_change_points(const ordstat_dist* dist,
                                                      int k, int n, double* x_star,
                                                      double* x_dagger);

typedef struct ordstat_shape_summary {
    int monotone;     /* ORDSTAT_TREND_* */
    int curvature;    /* ORDSTAT_CURV_* */
    double tolerance; /* 1e-7 * max(1, max |value|) */
    int violation_count;
} ordstat_shape_summary;

/* Expected order statistics for n in [n_min, n_max] plus discrete shape
 * verdicts.  `values` must hold n_max-n_min+1 doubles; `first_diffs` and
 * `second_diffs` (one and two fewer) may each be NULL.  `violation_n` /
 * `violation_magnitude` (capacity `violation_cap`) may be NULL; the summary
 * always reports the full violation count. */
ORDSTAT_API ordstat_status ordstat_shape_sequence(
    const ordstat_dist* dist, int k, int side, int n_min, int n_max,
    double* values, double* first_diffs, double* second_diffs, int* violation_n,
    double* violation_magnitude, int violation_cap,
    ordstat_shape_summary* summary);

/* Forward gap at n both ways: direct difference of expectations vs the
 * integral identity, with their absolute discrepancy. */
ORDSTAT_API ordstat_status ordstat_gap_consistency(const ordstat_dist* dist, int k,
                                                   int side, int n, double* direct,
                                                   double* identity,
                                                   double* abs_err);

/* ---------------------------------------------------------------------------
 * Auctions
 *
 * Cost grammar: "poly:c0,c1,...,cd" or "table:v2,v3,..." (table indexed from
 * n = 2).  Costs must be nonnegative and discretely convex.
 * ------------------------------------------------------------------------- */

ORDSTAT_API ordstat_status ordstat_cost_parse(const char* spec, ordstat_cost** out);
ORDSTAT_API void ordstat_cost_free(ordstat_cost* cost);
ORDSTAT_API ordstat_status ordstat_cost_eval(const ordstat_cost* cost, int n,
                                             double* out);
/* Largest n the model can price (INT_MAX for polynomials). */
ORDSTAT_API int ordstat_cost_max_n(const ordstat_cost* cost);

/* Auctioneer payoff E[n-1:n] - c(n) for n >= 2, zero for n in {0, 1}. */
ORDSTAT_API ordstat_status ordstat_objective(const ordstat_dist* dist,
                                             const ordstat_cost* cost, int n,
                                             double* out);

typedef struct ordstat_auction_result {
    int n_star;
    int concavity_certified; /* hazard class permitted the early stop */
    int tie_broken;          /* another n attains the max within 1e-9 */
    int evaluated_max_n;     /* objective evaluated for n in [0, this] */
} ordstat_auction_result;

/* Smallest maximizer of the objective over n in {0, ..., n_max}.  Pass a NaN
 * reserve for the no-reserve auction.  When `g_values` is non-NULL it must
 * hold n_max+1 doubles; entries beyond evaluated_max_n are set to NaN.
 * force_exhaustive disables the concavity early stop (both paths return the
 * same maximizer). */
ORDSTAT_API ordstat_status ordstat_optimize(const ordstat_dist* dist,
                                            const ordstat_cost* cost, int n_max,
                                            double reserve, int force_exhaustive,
                                            double* g_values,
                                            ordstat_auction_result* out);

/* Expected order statistics conditioned on all (MAX_OF_N) or all but one
 * (SECOND_OF_N) of the n draws lying at or below the reserve. */
ORDSTAT_API ordstat_status ordstat_conditional_lower_os(const ordstat_dist* dist,
                                                        double r, int which, int n,
                                                        double* out);

/* Expected revenue with reserve r: second-highest draw when it clears r, r
 * when only the highest does, zero otherwise. */
ORDSTAT_API ordstat_status ordstat_reserve_revenue(const ordstat_dist* dist,
                                                   double r, int n, double* out);

/* Second difference in n of the reserve revenue's tail integral (n >= 3);
 * nonpositive for MHR distributions whenever F(r) <= 1 - 2/n. */
ORDSTAT_API ordstat_status ordstat_reserve_second_difference(
    const ordstat_dist* dist, double r, int n, double* out);

/* Distribution-free closed form of the reserve concavity certificate as a
 * function of F(r); nonpositive whenever F(r) <= 1 - 2/n. */
ORDSTAT_API ordstat_status ordstat_reserve_j(double F_r, int n, double* out);

/* 1 when F(r) <= 1 - 2/n. */
ORDSTAT_API ordstat_status ordstat_reserve_condition(const ordstat_dist* dist,
                                                     double r, int n, int* ok);

/* ---------------------------------------------------------------------------
 * Monte-Carlo oracle
 *
 * Draws are inverse-transform samples from a counter-based stream: draw j of
 * trial t consumes stream index t*n + j for the given seed, so estimates are
 * bit-reproducible for equal (seed, trials) regardless of how trials are
 * partitioned.
 * ------------------------------------------------------------------------- */

typedef struct ordstat_estimate {
    double mean;
    double std_error; /* NaN when trials < 2 */
    long long trials;
} ordstat_estimate;

ORDSTAT_API ordstat_status ordstat_sim_order_stat(const ordstat_dist* dist, int k,
                                                  int n, long long trials,
                                                  uint64_t seed,
                                                  ordstat_estimate* out);
ORDSTAT_API ordstat_status ordstat_sim_reserve_revenue(const ordstat_dist* dist,
                                                       double r, int n,
                                                       long long trials,
                                                       uint64_t seed,
                                                       ordstat_estimate* out);

#ifdef __cplusplus
}
#endif

#endif /* ORDSTAT_H */
