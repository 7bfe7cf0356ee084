#include "ordstat/auction.hpp"

#include "ordstat/errors.hpp"
#include "ordstat/order_stats.hpp"
#include "ordstat/quadrature.hpp"
#include "ordstat/special_functions.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>
#include <sstream>

namespace ordstat {

namespace {

// Absolute tolerance for objective ties; an indifferent auctioneer recruits
// the smaller bidder pool.
constexpr double kTieTol = 1e-9;

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_nonnegative_support(const Distribution& dist, const char* what) {
    if (dist.support_min() < 0.0)
        throw DomainError(std::string(what) +
                          " requires a valuation distribution supported on [0, inf)");
}

void require_reserve_in_support(const Distribution& dist, double r) {
    if (!(r >= dist.support_min()) || !(r <= dist.support_max()))
        throw DomainError("reserve must lie in the support of the distribution");
}

bool mhr_certified(const Distribution& dist) {
    const MonotonicityVerdict v = dist.classify();
    return v.mhr == Monotonicity::Increasing || v.mhr == Monotonicity::Constant;
}

AuctionResult scan(const std::function<double(int)>& revenue, const CostModel& cost,
                   int n_max, int certified_from, bool force_exhaustive) {
    if (n_max < 2) throw DomainError("optimizer requires n_max >= 2");
    if (cost.max_n() < n_max) {
        std::ostringstream os;
        os << "cost model prices n only up to " << cost.max_n()
           << ", but n_max is " << n_max;
        throw DomainError(os.str());
    }

    AuctionResult res;
    res.g_values.assign(static_cast<size_t>(n_max) + 1,
                        std::numeric_limits<double>::quiet_NaN());
    res.g_values[0] = 0.0;
    if (n_max >= 1) res.g_values[1] = 0.0;
    res.concavity_certified = certified_from <= n_max && !force_exhaustive;

    int last = 1;
    for (int n = 2; n <= n_max; ++n) {
        res.g_values[n] = revenue(n) - cost(n);
        last = n;
        // Within the certified region the objective is concave: once it
        // strictly falls it cannot recover.
        if (!force_exhaustive && n - 1 >= certified_from &&
            res.g_values[n] < res.g_values[n - 1] - kTieTol)
            break;
    }
    res.evaluated_max_n = last;

    double best = 0.0;
    for (int n = 0; n <= last; ++n) best = std::max(best, res.g_values[n]);
    int n_star = 0;
    for (int n = 0; n <= last; ++n) {
        if (res.g_values[n] >= best - kTieTol) {
            n_star = n;
            break;
        }
    }
    int near_best = 0;
    for (int n = 0; n <= last; ++n)
        if (res.g_values[n] >= best - kTieTol) ++near_best;
    res.n_star = n_star;
    res.tie_broken = near_best > 1;

    if (n_star == n_max &&
        res.g_values[n_max] > res.g_values[n_max - 1] + kTieTol)
        throw BoundaryMaximizerError(
            "objective still increasing at n_max; no finite maximizer found "
            "within the scan range");
    return res;
}

}  // namespace

CostModel CostModel::polynomial(std::vector<double> coefficients, int validation_n) {
    if (coefficients.empty()) throw ParseError("polynomial cost needs coefficients");
    CostModel m;
    m.is_table_ = false;
    m.coeffs_ = std::move(coefficients);
    m.max_n_ = INT_MAX;
    m.validate_grid(0, validation_n);
    return m;
}

CostModel CostModel::table(std::vector<double> values_from_n2) {
    if (values_from_n2.empty()) throw ParseError("cost table needs values");
    CostModel m;
    m.is_table_ = true;
    m.table_ = std::move(values_from_n2);
    m.max_n_ = 1 + static_cast<int>(m.table_.size());
    m.validate_grid(2, m.max_n_);
    return m;
}

CostModel CostModel::parse(std::string_view spec, int validation_n) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("cost spec must look like 'poly:c0,c1,...' or 'table:v2,v3,...'");
    std::string kind(spec.substr(0, colon));
    std::transform(kind.begin(), kind.end(), kind.begin(),
                   [](unsigned char c) { return std::tolower(c); });

    std::vector<double> values;
    std::string rest(spec.substr(colon + 1));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            values.push_back(std::stod(item, &pos));
            if (pos != item.size()) throw std::invalid_argument("trailing junk");
        } catch (const std::exception&) {
            throw ParseError("invalid cost value '" + item + "'");
        }
    }
    if (kind == "poly") return polynomial(std::move(values), validation_n);
    if (kind == "table") return table(std::move(values));
    throw ParseError("unknown cost kind '" + kind + "'");
}

double CostModel::operator()(int n) const {
    if (n < 0) throw DomainError("cost is defined for n >= 0");
    if (is_table_) {
        if (n < 2)
            return table_.front();  // unused by the objective (g(0) = g(1) = 0)
        if (n > max_n_) throw DomainError("n beyond the cost table");
        return table_[static_cast<size_t>(n) - 2];
    }
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * n + *it;
    return acc;
}

void CostModel::validate_grid(int lo, int hi) const {
    double scale = 1.0;
    for (int n = lo; n <= hi; ++n)
        scale = std::max(scale, std::fabs((*this)(n)));
    const double tol = 1e-12 * scale;
    for (int n = lo; n <= hi; ++n) {
        if ((*this)(n) < -tol)
            throw ParseError("cost must be nonnegative on the evaluation range");
        if (n >= lo + 2) {
            const double dd = (*this)(n) - 2.0 * (*this)(n - 1) + (*this)(n - 2);
            if (dd < -tol)
                throw ParseError("cost must be discretely convex on the evaluation range");
        }
    }
}

std::string CostModel::describe() const {
    std::ostringstream os;
    if (is_table_) {
        os << "table:";
        for (size_t i = 0; i < table_.size(); ++i)
            os << (i ? "," : "") << table_[i];
    } else {
        os << "poly:";
        for (size_t i = 0; i < coeffs_.size(); ++i)
            os << (i ? "," : "") << coeffs_[i];
    }
    return os.str();
}

double objective(const Distribution& dist, const CostModel& cost, int n) {
    if (n < 0) throw DomainError("objective is defined for n >= 0");
    if (n < 2) return 0.0;
    return expected_order_stat(dist, n - 1, n) - cost(n);
}

AuctionResult optimize(const Distribution& dist, const CostModel& cost, int n_max,
                       bool force_exhaustive) {
    const int certified_from = mhr_certified(dist) ? 2 : INT_MAX;
    auto revenue = [&dist](int n) { return expected_order_stat(dist, n - 1, n); };
    return scan(revenue, cost, n_max, certified_from, force_exhaustive);
}

double conditional_lower_os(const Distribution& dist, double r,
                            ConditionalKind which, int n) {
    require_nonnegative_support(dist, "conditional_lower_os");
    require_reserve_in_support(dist, r);
    const int needed = which == ConditionalKind::SecondOfN ? 2 : 1;
    if (n < needed) throw DomainError("conditional_lower_os: n too small");
    const double Fr = dist.cdf(r);
    if (!(Fr > 0.0))
        throw DomainError("conditional_lower_os requires F(r) > 0");

    auto integrand = [&](double y) {
        const double s = dist.cdf(y) / Fr;
        if (which == ConditionalKind::MaxOfN) return 1.0 - std::pow(s, n);
        return sf::top_two_survival(s, 1.0 - s, n);
    };
    return integrate_or_throw(integrand, 0.0, r, {}, "conditional_lower_os");
}

double reserve_tail_integral(const Distribution& dist, double r, int n) {
    require_nonnegative_support(dist, "reserve_tail_integral");
    require_reserve_in_support(dist, r);
    if (n < 2) throw DomainError("reserve_tail_integral requires n >= 2");
    const double u_lo = dist.cdf(r);
    auto g = [&](double u, double w) {
        return sf::top_two_survival(u, w, n) / dist.pdf(dist.quantile2(u, w));
    };
    return integrate_u_range(g, u_lo, 0.0, {}, "reserve_tail_integral");
}

double reserve_revenue(const Distribution& dist, double r, int n) {
    require_nonnegative_support(dist, "reserve_revenue");
    require_reserve_in_support(dist, r);
    if (n < 2) throw DomainError("reserve_revenue requires n >= 2");
    const MomentExistence me = dist.moment_existence(n - 1, n);
    if (!me.exists) throw NoMomentError(me.reason);
    const double Fr = dist.cdf(r);
    // A reserve nobody can fail to meet is no reserve at all.
    if (Fr == 0.0) return expected_order_stat(dist, n - 1, n);
    return r * (1.0 - std::pow(Fr, n)) + reserve_tail_integral(dist, r, n);
}

double reserve_second_difference(const Distribution& dist, double r, int n) {
    require_nonnegative_support(dist, "reserve_second_difference");
    require_reserve_in_support(dist, r);
    if (n < 3) throw DomainError("reserve_second_difference requires n >= 3");
    const double u_lo = dist.cdf(r);
    auto g = [&](double u, double w) {
        const double u_pow = u <= 0.5 ? std::pow(u, n - 2)
                                      : std::exp((n - 2) * std::log1p(-w));
        return w * w * u_pow * (1.0 - n * w) / dist.pdf(dist.quantile2(u, w));
    };
    return integrate_u_range(g, u_lo, 0.0, {}, "reserve_second_difference");
}

double reserve_j(double F_r, int n) {
    if (!(F_r >= 0.0) || !(F_r <= 1.0))
        throw DomainError("reserve_j requires F_r in [0, 1]");
    if (n < 2) throw DomainError("reserve_j requires n >= 2");
    const double w = 1.0 - F_r;
    const double lead = std::pow(F_r, n - 1);
    const double bracket =
        -1.0 + lead * (static_cast<double>(n) * n * w * w + n * w - w + 1.0);
    return bracket / (static_cast<double>(n) * (n + 1.0));
}

bool reserve_condition(const Distribution& dist, double r, int n) {
    if (n < 2) throw DomainError("reserve_condition requires n >= 2");
    return dist.cdf(r) <= 1.0 - 2.0 / static_cast<double>(n);
}

AuctionResult optimize_with_reserve(const Distribution& dist, const CostModel& cost,
                                    double r, int n_max, bool force_exhaustive) {
    require_nonnegative_support(dist, "optimize_with_reserve");
    require_reserve_in_support(dist, r);
    const double Fr = dist.cdf(r);
    if (Fr == 0.0) return optimize(dist, cost, n_max, force_exhaustive);

    int certified_from = INT_MAX;
    if (mhr_certified(dist) && Fr < 1.0) {
        // The reserve condition F(r) <= 1 - 2/n holds from n0 onward.
        const double n0 = 2.0 / (1.0 - Fr);
        if (n0 <= static_cast<double>(INT_MAX) - 2)
            certified_from = std::max(2, static_cast<int>(std::ceil(n0)));
    }
    auto revenue = [&dist, r](int n) { return reserve_revenue(dist, r, n); };
    return scan(revenue, cost, n_max, certified_from, force_exhaustive);
}

}  // namespace ordstat
