#include "ordstat.h"

#include "ordstat/auction.hpp"
#include "ordstat/distribution.hpp"
#include "ordstat/errors.hpp"
#include "ordstat/mc.hpp"
#include "ordstat/order_stats.hpp"
#include "ordstat/shape.hpp"

#include <algorithm>
#include <cmath>
#include <string>

using namespace ordstat;

struct ordstat_dist {
    Distribution impl;
    std::string description;
};

struct ordstat_cost {
    CostModel impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown error"; }

template <class Fn>
ordstat_status wrap(Fn&& fn) noexcept {
    try {
        fn();
        return ORDSTAT_OK;
    } catch (const ParseError& e) {
        set_error(e.what());
        return ORDSTAT_ERR_INVALID;
    } catch (const DomainError& e) {
        set_error(e.what());
        return ORDSTAT_ERR_DOMAIN;
    } catch (const NoMomentError& e) {
        set_error(e.what());
        return ORDSTAT_ERR_NO_MOMENT;
    } catch (const NumericalError& e) {
        set_error(e.what());
        return ORDSTAT_ERR_NUMERIC;
    } catch (const BoundaryMaximizerError& e) {
        set_error(e.what());
        return ORDSTAT_ERR_BOUNDARY;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ORDSTAT_ERR_INVALID;
    } catch (...) {
        set_error("unknown error");
        return ORDSTAT_ERR_INVALID;
    }
}

ordstat_status invalid(const char* why) {
    set_error(why);
    return ORDSTAT_ERR_INVALID;
}

int trend_code(SequenceTrend t) {
    switch (t) {
        case SequenceTrend::NonIncreasing: return ORDSTAT_TREND_NONINCREASING;
        case SequenceTrend::NonDecreasing: return ORDSTAT_TREND_NONDECREASING;
        case SequenceTrend::Neither: break;
    }
    return ORDSTAT_TREND_NEITHER;
}

int curvature_code(Curvature c) {
    switch (c) {
        case Curvature::Convex: return ORDSTAT_CURV_CONVEX;
        case Curvature::Concave: return ORDSTAT_CURV_CONCAVE;
        case Curvature::Neither: break;
    }
    return ORDSTAT_CURV_NEITHER;
}

int monotonicity_code(Monotonicity m) {
    switch (m) {
        case Monotonicity::Increasing: return ORDSTAT_MONO_INCREASING;
        case Monotonicity::Decreasing: return ORDSTAT_MONO_DECREASING;
        case Monotonicity::Constant: return ORDSTAT_MONO_CONSTANT;
        case Monotonicity::NonMonotone: break;
    }
    return ORDSTAT_MONO_NONMONOTONE;
}

}  // namespace

extern "C" {

const char* ordstat_version(void) { return "1.0.0"; }

const char* ordstat_strerror(ordstat_status status) {
    switch (status) {
        case ORDSTAT_OK: return "ok";
        case ORDSTAT_ERR_INVALID: return "invalid argument or spec string";
        case ORDSTAT_ERR_DOMAIN: return "argument outside the operation's domain";
        case ORDSTAT_ERR_NO_MOMENT: return "requested expectation does not exist";
        case ORDSTAT_ERR_NUMERIC: return "quadrature failed to converge";
        case ORDSTAT_ERR_BOUNDARY: return "objective still improving at n_max";
    }
    return "unknown status";
}

const char* ordstat_last_error(void) { return g_last_error.c_str(); }

ordstat_status ordstat_dist_parse(const char* spec, ordstat_dist** out) {
    if (!spec || !out) return invalid("null argument");
    return wrap([&] {
        auto* h = new ordstat_dist{Distribution::parse(spec), ""};
        h->description = h->impl.describe();
        *out = h;
    });
}

void ordstat_dist_free(ordstat_dist* dist) { delete dist; }

const char* ordstat_dist_describe(const ordstat_dist* dist) {
    return dist ? dist->description.c_str() : "";
}

void ordstat_dist_support(const ordstat_dist* dist, double* lo, double* hi) {
    if (!dist) return;
    if (lo) *lo = dist->impl.support_min();
    if (hi) *hi = dist->impl.support_max();
}

double ordstat_dist_cdf(const ordstat_dist* dist, double x) {
    return dist ? dist->impl.cdf(x) : std::nan("");
}

double ordstat_dist_pdf(const ordstat_dist* dist, double x) {
    return dist ? dist->impl.pdf(x) : std::nan("");
}

ordstat_status ordstat_dist_quantile(const ordstat_dist* dist, double u,
                                     double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = dist->impl.quantile(u); });
}

ordstat_status ordstat_dist_hazard(const ordstat_dist* dist, double x,
                                   double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = dist->impl.hazard(x); });
}

ordstat_status ordstat_dist_reverse_hazard(const ordstat_dist* dist, double x,
                                           double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = dist->impl.reverse_hazard(x); });
}

ordstat_status ordstat_dist_classify(const ordstat_dist* dist, int grid_size,
                                     double u_margin, int* mhr, int* mrhr) {
    if (!dist || !mhr || !mrhr) return invalid("null argument");
    return wrap([&] {
        const MonotonicityVerdict v = dist->impl.classify(
            grid_size > 0 ? grid_size : 512, u_margin > 0.0 ? u_margin : 1e-4);
        *mhr = monotonicity_code(v.mhr);
        *mrhr = monotonicity_code(v.mrhr);
    });
}

int ordstat_moment_exists(const ordstat_dist* dist, int k, int n) {
    if (!dist) return 0;
    return dist->impl.moment_existence(k, n).exists ? 1 : 0;
}

ordstat_status ordstat_expected_order_stat(const ordstat_dist* dist, int k, int n,
                                           double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = expected_order_stat(dist->impl, k, n); });
}

ordstat_status ordstat_pareto_closed_form(double a, double v, int k, int n,
                                          double* out) {
    if (!out) return invalid("null argument");
    return wrap([&] { *out = pareto_closed_form(a, v, k, n); });
}

ordstat_status ordstat_bottom_gap(const ordstat_dist* dist, int k, int n,
                                  double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = bottom_gap(dist->impl, k, n); });
}

ordstat_status ordstat_top_gap(const ordstat_dist* dist, int k, int n,
                               double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = top_gap(dist->impl, k, n); });
}

ordstat_status ordstat_bottom_second_difference(const ordstat_dist* dist, int k,
                                                int n, double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = bottom_second_difference(dist->impl, k, n); });
}

ordstat_status ordstat_top_second_difference(const ordstat_dist* dist, int k,
                                             int n, double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = top_second_difference(dist->impl, k, n); });
}

ordstat_status ordstat_bottom_kernel_tail_integral(const ordstat_dist* dist,
                                                   int k, int n, double t,
                                                   double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = bottom_kernel_tail_integral(dist->impl, k, n, t); });
}

ordstat_status ordstat_top_kernel_head_integral(const ordstat_dist* dist, int k,
                                                int n, double t, double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = top_kernel_head_integral(dist->impl, k, n, t); });
}

ordstat_status ordstat_sign_change_points(const ordstat_dist* dist, int k, int n,
                                          double* x_star, double* x_dagger) {
    if (!dist || !x_star || !x_dagger) return invalid("null argument");
    return wrap([&] {
        const auto [star, dagger] = sign_change_points(dist->impl, k, n);
        *x_star = star;
        *x_dagger = dagger;
    });
}

ordstat_status ordstat_shape_sequence(const ordstat_dist* dist, int k, int side,
                                      int n_min, int n_max, double* values,
                                      double* first_diffs, double* second_diffs,
                                      int* violation_n,
                                      double* violation_magnitude,
                                      int violation_cap,
                                      ordstat_shape_summary* summary) {
    if (!dist || !values || !summary) return invalid("null argument");
    if (side != ORDSTAT_SIDE_BOTTOM && side != ORDSTAT_SIDE_TOP)
        return invalid("side must be ORDSTAT_SIDE_BOTTOM or ORDSTAT_SIDE_TOP");
    return wrap([&] {
        const ShapeReport rep =
            sequence(dist->impl, k,
                     side == ORDSTAT_SIDE_BOTTOM ? Side::Bottom : Side::Top, n_min,
                     n_max);
        for (size_t i = 0; i < rep.values.size(); ++i) values[i] = rep.values[i];
        if (first_diffs)
            for (size_t i = 0; i < rep.first_diffs.size(); ++i)
                first_diffs[i] = rep.first_diffs[i];
        if (second_diffs)
            for (size_t i = 0; i < rep.second_diffs.size(); ++i)
                second_diffs[i] = rep.second_diffs[i];
        if (violation_n && violation_magnitude) {
            const int m = std::min<int>(violation_cap,
                                        static_cast<int>(rep.violations.size()));
            for (int i = 0; i < m; ++i) {
                violation_n[i] = rep.violations[static_cast<size_t>(i)].n;
                violation_magnitude[i] =
                    rep.violations[static_cast<size_t>(i)].magnitude;
            }
        }
        summary->monotone = trend_code(rep.monotone);
        summary->curvature = curvature_code(rep.curvature);
        summary->tolerance = rep.tolerance;
        summary->violation_count = static_cast<int>(rep.violations.size());
    });
}

ordstat_status ordstat_gap_consistency(const ordstat_dist* dist, int k, int side,
                                       int n, double* direct, double* identity,
                                       double* abs_err) {
    if (!dist || !direct || !identity || !abs_err) return invalid("null argument");
    if (side != ORDSTAT_SIDE_BOTTOM && side != ORDSTAT_SIDE_TOP)
        return invalid("side must be ORDSTAT_SIDE_BOTTOM or ORDSTAT_SIDE_TOP");
    return wrap([&] {
        const GapConsistency g = gap_consistency(
            dist->impl, k, side == ORDSTAT_SIDE_BOTTOM ? Side::Bottom : Side::Top,
            n);
        *direct = g.direct;
        *identity = g.identity;
        *abs_err = g.abs_err;
    });
}

ordstat_status ordstat_cost_parse(const char* spec, ordstat_cost** out) {
    if (!spec || !out) return invalid("null argument");
    return wrap([&] { *out = new ordstat_cost{CostModel::parse(spec)}; });
}

void ordstat_cost_free(ordstat_cost* cost) { delete cost; }

ordstat_status ordstat_cost_eval(const ordstat_cost* cost, int n, double* out) {
    if (!cost || !out) return invalid("null argument");
    return wrap([&] { *out = cost->impl(n); });
}

int ordstat_cost_max_n(const ordstat_cost* cost) {
    return cost ? cost->impl.max_n() : 0;
}

ordstat_status ordstat_objective(const ordstat_dist* dist,
                                 const ordstat_cost* cost, int n, double* out) {
    if (!dist || !cost || !out) return invalid("null argument");
    return wrap([&] { *out = objective(dist->impl, cost->impl, n); });
}

ordstat_status ordstat_optimize(const ordstat_dist* dist, const ordstat_cost* cost,
                                int n_max, double reserve, int force_exhaustive,
                                double* g_values, ordstat_auction_result* out) {
    if (!dist || !cost || !out) return invalid("null argument");
    return wrap([&] {
        const AuctionResult r =
            std::isnan(reserve)
                ? optimize(dist->impl, cost->impl, n_max, force_exhaustive != 0)
                : optimize_with_reserve(dist->impl, cost->impl, reserve, n_max,
                                        force_exhaustive != 0);
        out->n_star = r.n_star;
        out->concavity_certified = r.concavity_certified ? 1 : 0;
        out->tie_broken = r.tie_broken ? 1 : 0;
        out->evaluated_max_n = r.evaluated_max_n;
        if (g_values)
            for (int n = 0; n <= n_max; ++n)
                g_values[n] = n < static_cast<int>(r.g_values.size())
                                  ? r.g_values[static_cast<size_t>(n)]
                                  : std::nan("");
    });
}

ordstat_status ordstat_conditional_lower_os(const ordstat_dist* dist, double r,
                                            int which, int n, double* out) {
    if (!dist || !out) return invalid("null argument");
    if (which != ORDSTAT_COND_MAX_OF_N && which != ORDSTAT_COND_SECOND_OF_N)
        return invalid("which must be ORDSTAT_COND_MAX_OF_N or _SECOND_OF_N");
    return wrap([&] {
        *out = conditional_lower_os(dist->impl, r,
                                    which == ORDSTAT_COND_MAX_OF_N
                                        ? ConditionalKind::MaxOfN
                                        : ConditionalKind::SecondOfN,
                                    n);
    });
}

ordstat_status ordstat_reserve_revenue(const ordstat_dist* dist, double r, int n,
                                       double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = reserve_revenue(dist->impl, r, n); });
}

ordstat_status ordstat_reserve_second_difference(const ordstat_dist* dist,
                                                 double r, int n, double* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] { *out = reserve_second_difference(dist->impl, r, n); });
}

ordstat_status ordstat_reserve_j(double F_r, int n, double* out) {
    if (!out) return invalid("null argument");
    return wrap([&] { *out = reserve_j(F_r, n); });
}

ordstat_status ordstat_reserve_condition(const ordstat_dist* dist, double r,
                                         int n, int* ok) {
    if (!dist || !ok) return invalid("null argument");
    return wrap([&] { *ok = reserve_condition(dist->impl, r, n) ? 1 : 0; });
}

ordstat_status ordstat_sim_order_stat(const ordstat_dist* dist, int k, int n,
                                      long long trials, uint64_t seed,
                                      ordstat_estimate* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] {
        const Estimate e = sim_order_stat(dist->impl, k, n, SimConfig{trials, seed});
        out->mean = e.mean;
        out->std_error = e.std_error;
        out->trials = e.trials;
    });
}

ordstat_status ordstat_sim_reserve_revenue(const ordstat_dist* dist, double r,
                                           int n, long long trials, uint64_t seed,
                                           ordstat_estimate* out) {
    if (!dist || !out) return invalid("null argument");
    return wrap([&] {
        const Estimate e =
            sim_reserve_revenue(dist->impl, r, n, SimConfig{trials, seed});
        out->mean = e.mean;
        out->std_error = e.std_error;
        out->trials = e.trials;
    });
}

}  // extern "C"
