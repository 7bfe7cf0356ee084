#ifndef ORDSTAT_QUADRATURE_HPP
#define ORDSTAT_QUADRATURE_HPP

// Globally adaptive Gauss-Kronrod quadrature.  The 7-15 pair is an open rule:
// no node ever touches a panel endpoint, so integrable endpoint singularities
// (the rule here for quantile-space integrands) are handled by bisection
// toward the endpoint rather than by special-casing.

#include "ordstat/errors.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

namespace ordstat {

struct QuadOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_panels = 1 << 16;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    int panels = 0;
    bool converged = false;
};

namespace detail {

// Kronrod-15 abscissae (positive half) and weights, with the embedded
// Gauss-7 weights on nodes 1, 3, 5 and the centre.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// Error assigned to panels whose samples (or rule value) are not finite:
// large enough to dominate the heap and block convergence, small enough that
// any number of them still sums to a finite total.
inline constexpr double kBadPanelError = 1e30;

// QUADPACK-style single-panel evaluation with error estimate.
template <class F>
Panel evaluate_panel(F& f, double a, double b) {
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(centre);
    bool finite_ok = std::isfinite(fc);
    double resk = kKronrodWeights[7] * fc;
    double resg = kGaussWeights[3] * fc;
    double resabs = kKronrodWeights[7] * std::fabs(fc);

    std::array<double, 7> flo{}, fhi{};
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kKronrodNodes[i];
        const double f1 = f(centre - dx);
        const double f2 = f(centre + dx);
        finite_ok = finite_ok && std::isfinite(f1) && std::isfinite(f2);
        flo[i] = f1;
        fhi[i] = f2;
        resk += kKronrodWeights[i] * (f1 + f2);
        resabs += kKronrodWeights[i] * (std::fabs(f1) + std::fabs(f2));
    }
    resg += kGaussWeights[0] * (flo[1] + fhi[1]);
    resg += kGaussWeights[1] * (flo[3] + fhi[3]);
    resg += kGaussWeights[2] * (flo[5] + fhi[5]);

    if (!finite_ok || !std::isfinite(resk)) {
        // A non-finite sample: keep splitting this panel until the samples
        // become finite or it cannot shrink any further.
        return Panel{a, b, 0.0, kBadPanelError};
    }

    const double reskh = resk * 0.5;
    double resasc = kKronrodWeights[7] * std::fabs(fc - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kKronrodWeights[i] *
                  (std::fabs(flo[i] - reskh) + std::fabs(fhi[i] - reskh));

    const double habs = std::fabs(half);
    resasc *= habs;
    resabs *= habs;
    double err = std::fabs((resk - resg) * half);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) err = std::max(err, 50.0 * eps * resabs);

    return Panel{a, b, resk * half, err};
}

}  // namespace detail

template <class F>
QuadResult adaptive_gauss_kronrod(F&& f, double a, double b, QuadOptions opt = {}) {
    QuadResult out;
    if (a == b) {
        out.converged = true;
        return out;
    }

    std::priority_queue<detail::Panel> heap;
    heap.push(detail::evaluate_panel(f, a, b));
    int panels = 1;
    double heap_value = heap.top().value;
    double heap_error = heap.top().error;
    double frozen_value = 0.0;
    double frozen_error = 0.0;

    while (true) {
        const double total_value = frozen_value + heap_value;
        const double total_error = frozen_error + heap_error;
        const double tol = std::max(opt.abs_tol, opt.rel_tol * std::fabs(total_value));
        if (std::isfinite(total_value) && total_error <= tol) {
            out.value = total_value;
            out.error = total_error;
            out.panels = panels;
            out.converged = true;
            return out;
        }
        if (heap.empty() || panels >= opt.max_panels) {
            out.value = total_value;
            out.error = total_error;
            out.panels = panels;
            out.converged = false;
            return out;
        }

        const detail::Panel worst = heap.top();
        heap.pop();
        heap_value -= worst.value;
        heap_error -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // Cannot be refined further in double precision; keep its
            // contribution but stop splitting it.
            frozen_value += worst.value;
            frozen_error += worst.error;
            continue;
        }

        const detail::Panel left = detail::evaluate_panel(f, worst.a, mid);
        const detail::Panel right = detail::evaluate_panel(f, mid, worst.b);
        heap_value += left.value + right.value;
        heap_error += left.error + right.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
}

// Convenience wrapper that throws on non-convergence.
template <class F>
double integrate_or_throw(F&& f, double a, double b, QuadOptions opt = {},
                          const char* what = "quadrature") {
    QuadResult r = adaptive_gauss_kronrod(f, a, b, opt);
    if (!r.converged)
        throw NumericalError(std::string(what) +
                                 ": adaptive quadrature did not converge "
                                 "(error estimate " +
                                 std::to_string(r.error) + " after " +
                                 std::to_string(r.panels) + " panels)",
                             r.error);
    return r.value;
}

// Integrate g(u, w) over u in [u_lo, u_hi] inside the unit interval, where
// the upper endpoint is given as its distance from 1 (w_hi = 1 - u_hi,
// supplied exactly).  The integrand receives both u and w = 1 - u; the upper
// half of the range is traversed in the w variable so that either tail is
// evaluated at full relative precision.  Both halves use open rules, so u = 0
// and u = 1 are never sampled.
template <class G>
double integrate_u_range(G&& g, double u_lo, double w_hi, QuadOptions opt = {},
                         const char* what = "quadrature") {
    auto in_u = [&g](double u) { return g(u, 1.0 - u); };
    auto in_w = [&g](double w) { return g(1.0 - w, w); };
    const double u_hi = 1.0 - w_hi;
    if (!(u_lo < u_hi)) return 0.0;
    if (u_lo < 0.5 && w_hi < 0.5)
        return integrate_or_throw(in_u, u_lo, 0.5, opt, what) +
               integrate_or_throw(in_w, w_hi, 0.5, opt, what);
    if (u_hi <= 0.5)  // entirely in the lower half
        return integrate_or_throw(in_u, u_lo, u_hi, opt, what);
    // entirely in the upper half
    return integrate_or_throw(in_w, w_hi, 1.0 - u_lo, opt, what);
}

}  // namespace ordstat

#endif
