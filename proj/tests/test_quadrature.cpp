#include "ordstat/quadrature.hpp"

#include <doctest.h>

#include <cmath>

using namespace ordstat;

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("smooth integrands to tight tolerance") {
    auto poly = [](double x) { return 3.0 * x * x; };
    QuadResult r = adaptive_gauss_kronrod(poly, 0.0, 1.0);
    REQUIRE(r.converged);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-14));

    auto osc = [](double x) { return std::sin(10.0 * x); };
    r = adaptive_gauss_kronrod(osc, 0.0, 2.0);
    REQUIRE(r.converged);
    CHECK(r.value == doctest::Approx((1.0 - std::cos(20.0)) / 10.0).epsilon(1e-12));
}

TEST_CASE("integrable endpoint singularities") {
    auto inv_sqrt = [](double x) { return 1.0 / std::sqrt(x); };
    QuadResult r = adaptive_gauss_kronrod(inv_sqrt, 0.0, 1.0);
    REQUIRE(r.converged);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-9));

    auto log_sing = [](double x) { return std::log(x); };
    r = adaptive_gauss_kronrod(log_sing, 0.0, 1.0);
    REQUIRE(r.converged);
    CHECK(r.value == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("non-integrable singularity reports failure") {
    auto diverging = [](double x) { return 1.0 / x; };
    const QuadResult r = adaptive_gauss_kronrod(diverging, 0.0, 1.0);
    CHECK_FALSE(r.converged);
    CHECK_THROWS_AS(integrate_or_throw(diverging, 0.0, 1.0), NumericalError);
}

TEST_CASE("empty interval") {
    auto f = [](double) { return 1.0; };
    const QuadResult r = adaptive_gauss_kronrod(f, 0.25, 0.25);
    CHECK(r.converged);
    CHECK(r.value == 0.0);
}

TEST_CASE("split unit-range integration matches closed forms") {
    // g = u^3 (carried in both variables): integral over [0,1] is 1/4.
    auto g = [](double u, double w) {
        (void)w;
        return u * u * u;
    };
    CHECK(integrate_u_range(g, 0.0, 0.0) == doctest::Approx(0.25).epsilon(1e-13));

    // Endpoint-singular in the upper tail: (1-u)^(-1/3), integral 3/2.
    auto h = [](double, double w) { return std::pow(w, -1.0 / 3.0); };
    CHECK(integrate_u_range(h, 0.0, 0.0) == doctest::Approx(1.5).epsilon(1e-9));

    // Partial ranges, all three layouts.
    auto one = [](double, double) { return 1.0; };
    CHECK(integrate_u_range(one, 0.1, 0.2) == doctest::Approx(0.7).epsilon(1e-13));
    CHECK(integrate_u_range(one, 0.1, 0.7) == doctest::Approx(0.2).epsilon(1e-13));
    CHECK(integrate_u_range(one, 0.8, 0.05) == doctest::Approx(0.15).epsilon(1e-13));
    CHECK(integrate_u_range(one, 0.9, 0.2) == 0.0);
}

TEST_SUITE_END();
