#include "ordstat/distribution.hpp"

#include "ordstat/errors.hpp"
#include "ordstat/special_functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

namespace ordstat {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

double parse_number(const std::string& key, const std::string& text) {
    try {
        size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid numeric value for '" + key + "': " + text);
    }
}

}  // namespace

Distribution Distribution::uniform(double lo, double hi) {
    Distribution d(Family::Uniform, lo, hi);
    d.validate();
    return d;
}
Distribution Distribution::exponential(double rate) {
    Distribution d(Family::Exponential, rate, 0.0);
    d.validate();
    return d;
}
Distribution Distribution::normal(double mean, double stddev) {
    Distribution d(Family::Normal, mean, stddev);
    d.validate();
    return d;
}
Distribution Distribution::weibull(double shape, double scale) {
    Distribution d(Family::Weibull, shape, scale);
    d.validate();
    return d;
}
Distribution Distribution::gamma(double shape, double scale) {
    Distribution d(Family::Gamma, shape, scale);
    d.validate();
    return d;
}
Distribution Distribution::gumbel(double location, double scale) {
    Distribution d(Family::Gumbel, location, scale);
    d.validate();
    return d;
}
Distribution Distribution::pareto(double scale_a, double shape_v) {
    Distribution d(Family::Pareto, scale_a, shape_v);
    d.validate();
    return d;
}
Distribution Distribution::negated_pareto(double scale_a, double shape_v) {
    Distribution d(Family::NegatedPareto, scale_a, shape_v);
    d.validate();
    return d;
}

void Distribution::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ParseError(std::string(name) + " must be strictly positive");
    };
    switch (family_) {
        case Family::Uniform:
            if (!std::isfinite(p1_) || !std::isfinite(p2_) || !(p1_ < p2_))
                throw ParseError("uniform requires lo < hi");
            break;
        case Family::Exponential:
            positive(p1_, "rate");
            break;
        case Family::Normal:
            if (!std::isfinite(p1_)) throw ParseError("mean must be finite");
            positive(p2_, "stddev");
            break;
        case Family::Weibull:
            positive(p1_, "shape");
            positive(p2_, "scale");
            break;
        case Family::Gamma:
            positive(p1_, "shape");
            positive(p2_, "scale");
            break;
        case Family::Gumbel:
            if (!std::isfinite(p1_)) throw ParseError("location must be finite");
            positive(p2_, "scale");
            break;
        case Family::Pareto:
        case Family::NegatedPareto:
            positive(p1_, "a");
            positive(p2_, "v");
            break;
    }
}

Distribution Distribution::parse(std::string_view spec) {
    const auto colon = spec.find(':');
    if (colon == std::string_view::npos)
        throw ParseError("distribution spec must look like 'family:key=value,...'");
    const std::string fam = lower(spec.substr(0, colon));

    std::map<std::string, double> kv;
    std::string rest(spec.substr(colon + 1));
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("expected key=value, got '" + item + "'");
        std::string key = lower(std::string_view(item).substr(0, eq));
        if (kv.count(key)) throw ParseError("duplicate key '" + key + "'");
        kv[key] = parse_number(key, item.substr(eq + 1));
    }

    auto take = [&kv, &fam](const char* key) {
        auto it = kv.find(key);
        if (it == kv.end())
            throw ParseError(fam + " requires key '" + std::string(key) + "'");
        const double v = it->second;
        kv.erase(it);
        return v;
    };
    auto finish = [&kv](Distribution d) {
        if (!kv.empty()) throw ParseError("unknown key '" + kv.begin()->first + "'");
        return d;
    };

    if (fam == "uniform") {
        const double lo = take("lo"), hi = take("hi");
        return finish(uniform(lo, hi));
    }
    if (fam == "exponential") return finish(exponential(take("rate")));
    if (fam == "normal") {
        const double mean = take("mean"), sd = take("stddev");
        return finish(normal(mean, sd));
    }
    if (fam == "weibull") {
        const double shape = take("shape"), scale = take("scale");
        return finish(weibull(shape, scale));
    }
    if (fam == "gamma") {
        const double shape = take("shape"), scale = take("scale");
        return finish(gamma(shape, scale));
    }
    if (fam == "gumbel") {
        const double location = take("location"), scale = take("scale");
        return finish(gumbel(location, scale));
    }
    if (fam == "pareto") {
        const double a = take("a"), v = take("v");
        return finish(pareto(a, v));
    }
    if (fam == "negatedpareto" || fam == "negated_pareto") {
        const double a = take("a"), v = take("v");
        return finish(negated_pareto(a, v));
    }
    throw ParseError("unknown distribution family '" + fam + "'");
}

double Distribution::support_min() const {
    switch (family_) {
        case Family::Uniform: return p1_;
        case Family::Exponential:
        case Family::Weibull:
        case Family::Gamma: return 0.0;
        case Family::Normal:
        case Family::Gumbel:
        case Family::NegatedPareto: return -kInf;
        case Family::Pareto: return p1_;
    }
    return 0.0;
}

double Distribution::support_max() const {
    switch (family_) {
        case Family::Uniform: return p2_;
        case Family::NegatedPareto: return -p1_;
        default: return kInf;
    }
}

double Distribution::cdf(double x) const {
    switch (family_) {
        case Family::Uniform:
            if (x <= p1_) return 0.0;
            if (x >= p2_) return 1.0;
            return (x - p1_) / (p2_ - p1_);
        case Family::Exponential:
            return x <= 0.0 ? 0.0 : -std::expm1(-p1_ * x);
        case Family::Normal:
            return sf::normal_cdf((x - p1_) / p2_);
        case Family::Weibull:
            return x <= 0.0 ? 0.0 : -std::expm1(-std::pow(x / p2_, p1_));
        case Family::Gamma:
            return x <= 0.0 ? 0.0 : sf::regularized_gamma_p(p1_, x / p2_);
        case Family::Gumbel:
            return std::exp(-std::exp(-(x - p1_) / p2_));
        case Family::Pareto:
            return x <= p1_ ? 0.0 : -std::expm1(p2_ * std::log(p1_ / x));
        case Family::NegatedPareto:
            if (x >= -p1_) return 1.0;
            return std::exp(p2_ * std::log(p1_ / -x));
    }
    return 0.0;
}

double Distribution::sf(double x) const {
    switch (family_) {
        case Family::Uniform:
            if (x <= p1_) return 1.0;
            if (x >= p2_) return 0.0;
            return (p2_ - x) / (p2_ - p1_);
        case Family::Exponential:
            return x <= 0.0 ? 1.0 : std::exp(-p1_ * x);
        case Family::Normal:
            return sf::normal_sf((x - p1_) / p2_);
        case Family::Weibull:
            return x <= 0.0 ? 1.0 : std::exp(-std::pow(x / p2_, p1_));
        case Family::Gamma:
            return x <= 0.0 ? 1.0 : sf::regularized_gamma_q(p1_, x / p2_);
        case Family::Gumbel:
            return -std::expm1(-std::exp(-(x - p1_) / p2_));
        case Family::Pareto:
            return x <= p1_ ? 1.0 : std::exp(p2_ * std::log(p1_ / x));
        case Family::NegatedPareto:
            if (x >= -p1_) return 0.0;
            return -std::expm1(p2_ * std::log(p1_ / -x));
    }
    return 0.0;
}

double Distribution::pdf(double x) const {
    switch (family_) {
        case Family::Uniform:
            return (x < p1_ || x > p2_) ? 0.0 : 1.0 / (p2_ - p1_);
        case Family::Exponential:
            return x < 0.0 ? 0.0 : p1_ * std::exp(-p1_ * x);
        case Family::Normal:
            return sf::normal_pdf((x - p1_) / p2_) / p2_;
        case Family::Weibull: {
            if (x < 0.0) return 0.0;
            if (x == 0.0) return p1_ > 1.0 ? 0.0 : (p1_ == 1.0 ? 1.0 / p2_ : kInf);
            const double t = x / p2_;
            return (p1_ / p2_) * std::pow(t, p1_ - 1.0) * std::exp(-std::pow(t, p1_));
        }
        case Family::Gamma: {
            if (x < 0.0) return 0.0;
            if (x == 0.0) return p1_ > 1.0 ? 0.0 : (p1_ == 1.0 ? 1.0 / p2_ : kInf);
            const double t = x / p2_;
            return std::exp((p1_ - 1.0) * std::log(t) - t - std::lgamma(p1_)) / p2_;
        }
        case Family::Gumbel: {
            const double z = (x - p1_) / p2_;
            return std::exp(-z - std::exp(-z)) / p2_;
        }
        case Family::Pareto:
            if (x < p1_) return 0.0;
            return (p2_ / p1_) * std::exp(-(p2_ + 1.0) * std::log(x / p1_));
        case Family::NegatedPareto:
            if (x > -p1_) return 0.0;
            return (p2_ / p1_) * std::exp(-(p2_ + 1.0) * std::log(-x / p1_));
    }
    return 0.0;
}

double Distribution::quantile2(double u, double w) const {
    switch (family_) {
        case Family::Uniform:
            return u <= w ? p1_ + (p2_ - p1_) * u : p2_ - (p2_ - p1_) * w;
        case Family::Exponential:
            return u <= w ? -std::log1p(-u) / p1_ : -std::log(w) / p1_;
        case Family::Normal:
            return p1_ + p2_ * sf::normal_quantile(u, w);
        case Family::Weibull: {
            const double e = u <= w ? -std::log1p(-u) : -std::log(w);
            return p2_ * std::pow(e, 1.0 / p1_);
        }
        case Family::Gamma:
            return p2_ * sf::gamma_quantile(p1_, u, w);
        case Family::Gumbel: {
            const double l = u <= w ? std::log(u) : std::log1p(-w);
            return p1_ - p2_ * std::log(-l);
        }
        case Family::Pareto:
            // F(x) = 1 - (a/x)^v  =>  x = a w^(-1/v)
            return p1_ * std::exp(-(u <= w ? std::log1p(-u) : std::log(w)) / p2_);
        case Family::NegatedPareto:
            // F(x) = (a/-x)^v  =>  x = -a u^(-1/v)
            return -p1_ * std::exp(-(u <= w ? std::log(u) : std::log1p(-w)) / p2_);
    }
    return 0.0;
}

double Distribution::quantile(double u) const {
    if (!(u > 0.0) || !(u < 1.0))
        throw DomainError("quantile requires u in (0,1)");
    return quantile2(u, 1.0 - u);
}

double Distribution::hazard(double x) const {
    const double s = sf(x);
    if (!(s > 0.0))
        throw DomainError("hazard undefined where the survival function is 0");
    return pdf(x) / s;
}

double Distribution::reverse_hazard(double x) const {
    const double c = cdf(x);
    if (!(c > 0.0))
        throw DomainError("reverse hazard undefined where the CDF is 0");
    return pdf(x) / c;
}

namespace {

Monotonicity direction(const std::vector<double>& h) {
    bool constant = true;
    bool any_up = false;
    bool any_down = false;
    for (size_t i = 0; i + 1 < h.size(); ++i) {
        const double a = h[i], b = h[i + 1];
        if (a > 0.0 && std::fabs(b / a - 1.0) > 1e-9) constant = false;
        if (a == 0.0 && b != 0.0) constant = false;
        const double tol = 1e-9 * std::max(std::fabs(a), std::fabs(b));
        if (b > a + tol) any_up = true;
        if (b < a - tol) any_down = true;
    }
    if (constant) return Monotonicity::Constant;
    if (any_up && any_down) return Monotonicity::NonMonotone;
    return any_up ? Monotonicity::Increasing : Monotonicity::Decreasing;
}

}  // namespace

MonotonicityVerdict Distribution::classify(int grid_size, double u_margin) const {
    if (grid_size < 16) throw DomainError("classify requires grid_size >= 16");
    if (!(u_margin > 0.0) || !(u_margin < 0.5))
        throw DomainError("classify requires u_margin in (0, 0.5)");

    std::vector<double> hz(grid_size), rhz(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        const double u =
            u_margin + (1.0 - 2.0 * u_margin) * static_cast<double>(i) /
                           (grid_size - 1);
        const double x = quantile2(u, 1.0 - u);
        hz[i] = pdf(x) / sf(x);
        rhz[i] = pdf(x) / cdf(x);
    }
    return MonotonicityVerdict{direction(hz), direction(rhz), grid_size, u_margin};
}

MomentExistence Distribution::moment_existence(int k, int n) const {
    if (k < 1 || n < k)
        return {false, "order statistic indices require 1 <= k <= n"};
    std::ostringstream why;
    switch (family_) {
        case Family::Pareto:
            // Gamma(n - k - 1/v + 1) in the closed form must have a positive
            // argument: the upper tail index (n - k + 1) v must exceed 1.
            if (static_cast<double>(n - k + 1) * p2_ > 1.0) return {true, ""};
            why << "pareto expectation of order " << k << " of " << n
                << " diverges (requires (n-k+1)*v > 1, v=" << p2_ << ")";
            return {false, why.str()};
        case Family::NegatedPareto:
            // Mirror image: the heavy tail sits at the bottom.
            if (static_cast<double>(k) * p2_ > 1.0) return {true, ""};
            why << "negated pareto expectation of order " << k << " of " << n
                << " diverges (requires k*v > 1, v=" << p2_ << ")";
            return {false, why.str()};
        default:
            return {true, ""};
    }
}

std::string Distribution::describe() const {
    std::ostringstream os;
    switch (family_) {
        case Family::Uniform: os << "uniform:lo=" << p1_ << ",hi=" << p2_; break;
        case Family::Exponential: os << "exponential:rate=" << p1_; break;
        case Family::Normal: os << "normal:mean=" << p1_ << ",stddev=" << p2_; break;
        case Family::Weibull: os << "weibull:shape=" << p1_ << ",scale=" << p2_; break;
        case Family::Gamma: os << "gamma:shape=" << p1_ << ",scale=" << p2_; break;
        case Family::Gumbel: os << "gumbel:location=" << p1_ << ",scale=" << p2_; break;
        case Family::Pareto: os << "pareto:a=" << p1_ << ",v=" << p2_; break;
        case Family::NegatedPareto:
            os << "negatedpareto:a=" << p1_ << ",v=" << p2_;
            break;
    }
    return os.str();
}

}  // namespace ordstat
