#include "ordstat/order_stats.hpp"

#include "ordstat/errors.hpp"
#include "ordstat/quadrature.hpp"
#include "ordstat/special_functions.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace ordstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_indices(int k, int n) {
    if (k < 1 || n < k) {
        std::ostringstream os;
        os << "order statistic indices require 1 <= k <= n, got k=" << k
           << ", n=" << n;
        throw DomainError(os.str());
    }
}

void require_moment(const Distribution& dist, int k, int n) {
    const MomentExistence me = dist.moment_existence(k, n);
    if (!me.exists) throw NoMomentError(me.reason);
}

double binomial(double n, double k) { return std::exp(sf::log_binomial(n, k)); }

// Powers of u and w with the (1 - x)-side computed via log1p so that tiny
// tail values keep full relative precision.
double upow(double u, double w, int e) {
    if (e == 0) return 1.0;
    return u <= 0.5 ? std::pow(u, e) : std::exp(e * std::log1p(-w));
}
double wpow(double u, double w, int e) {
    if (e == 0) return 1.0;
    return w <= 0.5 ? std::pow(w, e) : std::exp(e * std::log1p(-u));
}

}  // namespace

double expected_order_stat(const Distribution& dist, int k, int n) {
    check_indices(k, n);
    require_moment(dist, k, n);
    // E[k:n] = int_0^1 Q(u) beta(u; k, n-k+1) du
    const double coeff =
        std::exp(std::lgamma(n + 1.0) - std::lgamma(static_cast<double>(k)) -
                 std::lgamma(n - k + 1.0));
    auto g = [&](double u, double w) {
        return coeff * upow(u, w, k - 1) * wpow(u, w, n - k) * dist.quantile2(u, w);
    };
    return integrate_u_range(g, 0.0, 0.0, {}, "expected_order_stat");
}

double pareto_closed_form(double a, double v, int k, int n) {
    check_indices(k, n);
    if (!(a > 0.0) || !(v > 0.0))
        throw DomainError("pareto closed form requires a > 0, v > 0");
    if (!(static_cast<double>(n - k + 1) * v > 1.0)) {
        std::ostringstream os;
        os << "pareto expectation of order " << k << " of " << n
           << " diverges (requires (n-k+1)*v > 1, v=" << v << ")";
        throw NoMomentError(os.str());
    }
    const double inv_v = 1.0 / v;
    return a * std::exp(std::lgamma(n + 1.0) - std::lgamma(n - k + 1.0) +
                        std::lgamma(n - k - inv_v + 1.0) -
                        std::lgamma(n - inv_v + 1.0));
}

double bottom_gap(const Distribution& dist, int k, int n) {
    check_indices(k, n);
    require_moment(dist, k, n);
    require_moment(dist, k, n + 1);
    const double coeff = binomial(n, k - 1.0);
    auto g = [&](double u, double w) {
        return coeff * upow(u, w, k) * wpow(u, w, n - k + 1) /
               dist.pdf(dist.quantile2(u, w));
    };
    return integrate_u_range(g, 0.0, 0.0, {}, "bottom_gap");
}

double top_gap(const Distribution& dist, int k, int n) {
    check_indices(k, n);
    if (n < k + 1)
        throw DomainError("top_gap requires n >= k + 1");
    require_moment(dist, n - k + 1, n);
    require_moment(dist, n - k, n - 1);
    const double coeff = binomial(n - 1.0, static_cast<double>(n - k));
    auto g = [&](double u, double w) {
        return coeff * upow(u, w, n - k) * wpow(u, w, k) /
               dist.pdf(dist.quantile2(u, w));
    };
    return integrate_u_range(g, 0.0, 0.0, {}, "top_gap");
}

double bottom_second_difference(const Distribution& dist, int k, int n) {
    check_indices(k, n);
    require_moment(dist, k, n);
    require_moment(dist, k, n + 2);
    const double coeff = binomial(n, k - 1.0);
    auto g = [&](double u, double w) {
        return coeff * upow(u, w, k) * wpow(u, w, n - k + 1) *
               kernels::bottom_curvature_bracket(k, n, u) /
               dist.pdf(dist.quantile2(u, w));
    };
    return integrate_u_range(g, 0.0, 0.0, {}, "bottom_second_difference");
}

double top_second_difference(const Distribution& dist, int k, int n) {
    check_indices(k, n);
    if (n < k + 1)
        throw DomainError("top_second_difference requires n >= k + 1");
    require_moment(dist, n - k + 2, n + 1);
    require_moment(dist, n - k, n - 1);
    const double coeff = binomial(n - 1.0, static_cast<double>(n - k));
    auto g = [&](double u, double w) {
        return coeff * upow(u, w, n - k) * wpow(u, w, k) *
               kernels::top_curvature_bracket(k, n, w) /
               dist.pdf(dist.quantile2(u, w));
    };
    return integrate_u_range(g, 0.0, 0.0, {}, "top_second_difference");
}

double bottom_kernel_tail_integral(const Distribution& dist, int k, int n, double t) {
    check_indices(k, n);
    double u_lo = 0.0;
    double w_hi = 0.0;
    if (t == -kInf) {
        u_lo = 0.0;
    } else if (t == kInf) {
        return 0.0;
    } else {
        u_lo = dist.cdf(t);
    }
    auto g = [&](double u, double w) {
        return upow(u, w, k - 1) * wpow(u, w, n - k + 1) *
               kernels::bottom_curvature_bracket(k, n, u);
    };
    return integrate_u_range(g, u_lo, w_hi, {}, "bottom_kernel_tail_integral");
}

double top_kernel_head_integral(const Distribution& dist, int k, int n, double t) {
    check_indices(k, n);
    double w_hi = 1.0;
    if (t == kInf) {
        w_hi = 0.0;
    } else if (t == -kInf) {
        return 0.0;
    } else {
        w_hi = dist.sf(t);
    }
    auto g = [&](double u, double w) {
        return upow(u, w, n - k) * wpow(u, w, k - 1) *
               kernels::top_curvature_bracket(k, n, w);
    };
    return integrate_u_range(g, 0.0, w_hi, {}, "top_kernel_head_integral");
}

std::pair<double, double> sign_change_points(const Distribution& dist, int k, int n) {
    check_indices(k, n);
    auto at_level = [&](double p) {
        if (p <= 0.0) return dist.support_min();
        if (p >= 1.0) return dist.support_max();
        return dist.quantile(p);
    };
    const double star = at_level((k - 1.0) / (n + 1.0));
    const double dagger = at_level((n - k + 1.0) / static_cast<double>(n));
    return {star, dagger};
}

}  // namespace ordstat
