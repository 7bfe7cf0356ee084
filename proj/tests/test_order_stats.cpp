#include "ordstat/order_stats.hpp"

#include "ordstat/errors.hpp"
#include "oracle_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

using namespace ordstat;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<Distribution> cross_check_families() {
    return {Distribution::uniform(0.0, 1.0), Distribution::exponential(1.0),
            Distribution::normal(0.0, 1.0),  Distribution::weibull(2.0, 1.0),
            Distribution::gamma(2.0, 1.0),   Distribution::gumbel(0.0, 1.0)};
}
}  // namespace

TEST_SUITE_BEGIN("order_stats");

TEST_CASE("uniform expectations match k/(n+1)") {
    const Distribution uni = Distribution::uniform(0.0, 1.0);
    for (int n = 1; n <= 12; ++n)
        for (int k = 1; k <= n; ++k) {
            const double want = oracle::uniform_order_stat(k, n);
            CHECK(expected_order_stat(uni, k, n) ==
                  doctest::Approx(want).epsilon(1e-8));
        }
    // affine equivariance
    const Distribution wide = Distribution::uniform(2.0, 6.0);
    CHECK(expected_order_stat(wide, 2, 4) ==
          doctest::Approx(2.0 + 4.0 * 0.4).epsilon(1e-9));
}

TEST_CASE("exponential expectations match harmonic sums") {
    const Distribution expo = Distribution::exponential(1.0);
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(expected_order_stat(expo, k, n) ==
                  doctest::Approx(oracle::exponential_order_stat(1.0, k, n))
                      .epsilon(1e-8));
    const Distribution fast = Distribution::exponential(4.0);
    CHECK(expected_order_stat(fast, 3, 3) ==
          doctest::Approx(oracle::exponential_order_stat(4.0, 3, 3)).epsilon(1e-8));
}

TEST_CASE("known closed forms for other families") {
    // single draw: the mean
    CHECK(expected_order_stat(Distribution::gamma(2.0, 1.5), 1, 1) ==
          doctest::Approx(3.0).epsilon(1e-8));
    // max of two standard normals: 1/sqrt(pi)
    CHECK(expected_order_stat(Distribution::normal(0.0, 1.0), 2, 2) ==
          doctest::Approx(0.5641895835477563).epsilon(1e-8));
    // max of three: 1.5/sqrt(pi)
    CHECK(expected_order_stat(Distribution::normal(0.0, 1.0), 3, 3) ==
          doctest::Approx(0.8462843753216345).epsilon(1e-8));
    // gumbel max of n is gumbel with location shifted by ln n
    const double euler = 0.5772156649015329;
    CHECK(expected_order_stat(Distribution::gumbel(0.0, 1.0), 5, 5) ==
          doctest::Approx(euler + std::log(5.0)).epsilon(1e-8));
    // weibull minimum rescales the sample size away
    CHECK(expected_order_stat(Distribution::weibull(2.0, 1.0), 1, 4) ==
          doctest::Approx(std::sqrt(std::atan2(0.0, -1.0)) / 2.0 / 2.0)
              .epsilon(1e-8));
}

TEST_CASE("pareto closed form reproduces the reference values") {
    for (auto [n, want] : {std::pair{2, 3.0}, {3, 5.4}, {4, 8.1}}) {
        CHECK(pareto_closed_form(1.0, 0.75, n - 1, n) ==
              doctest::Approx(want).epsilon(1e-12));
        CHECK(expected_order_stat(Distribution::pareto(1.0, 0.75), n - 1, n) ==
              doctest::Approx(want).epsilon(1e-7));
    }
    // scale equivariance
    CHECK(pareto_closed_form(2.0, 0.75, 2, 3) ==
          doctest::Approx(2.0 * pareto_closed_form(1.0, 0.75, 2, 3))
              .epsilon(1e-14));
    // closed form vs quadrature across valid cells
    const Distribution par = Distribution::pareto(1.0, 0.75);
    for (int n = 2; n <= 8; ++n)
        for (int k = 1; k <= n; ++k) {
            if (!par.moment_existence(k, n).exists) continue;
            CHECK(expected_order_stat(par, k, n) ==
                  doctest::Approx(pareto_closed_form(1.0, 0.75, k, n))
                      .epsilon(1e-7));
        }
    CHECK_THROWS_AS(pareto_closed_form(1.0, 0.75, 3, 3), NoMomentError);
}

TEST_CASE("negated pareto mirrors the pareto expectations") {
    const Distribution neg = Distribution::negated_pareto(1.0, 0.75);
    CHECK(expected_order_stat(neg, 2, 3) ==
          doctest::Approx(-5.4).epsilon(1e-7));
    CHECK(expected_order_stat(neg, 2, 2) ==
          doctest::Approx(-pareto_closed_form(1.0, 0.75, 1, 2)).epsilon(1e-7));
    CHECK_THROWS_AS(expected_order_stat(neg, 1, 4), NoMomentError);
}

TEST_CASE("rejects bad indices and missing moments") {
    const Distribution uni = Distribution::uniform(0.0, 1.0);
    CHECK_THROWS_AS(expected_order_stat(uni, 0, 3), DomainError);
    CHECK_THROWS_AS(expected_order_stat(uni, 4, 3), DomainError);
    CHECK_THROWS_AS(
        expected_order_stat(Distribution::pareto(1.0, 0.75), 3, 3), NoMomentError);
}

TEST_CASE("gaps equal direct differences of expectations") {
    CHECK(bottom_gap(Distribution::uniform(0.0, 1.0), 1, 1) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-9));
    CHECK(top_gap(Distribution::uniform(0.0, 1.0), 1, 2) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-9));

    for (const Distribution& d : cross_check_families()) {
        CAPTURE(d.describe());
        for (int k = 1; k <= 3; ++k) {
            for (int n = k; n <= 8; ++n) {
                const double direct = expected_order_stat(d, k, n) -
                                      expected_order_stat(d, k, n + 1);
                const double tol =
                    1e-7 * std::max(1.0, std::fabs(expected_order_stat(d, k, n)));
                CHECK(std::fabs(bottom_gap(d, k, n) - direct) <= tol);
                if (n >= k + 1) {
                    const double dtop = expected_order_stat(d, n - k + 1, n) -
                                        expected_order_stat(d, n - k, n - 1);
                    CHECK(std::fabs(top_gap(d, k, n) - dtop) <= tol);
                }
            }
        }
    }

    // heavy-tailed families, on the cells where the moments exist
    for (const Distribution& d : {Distribution::pareto(1.0, 2.5),
                                  Distribution::negated_pareto(1.0, 2.5),
                                  Distribution::pareto(1.0, 0.75)}) {
        CAPTURE(d.describe());
        for (int k = 1; k <= 3; ++k)
            for (int n = k + 1; n <= 8; ++n) {
                if (d.moment_existence(k, n).exists) {
                    const double mu = expected_order_stat(d, k, n);
                    const double tol = 1e-7 * std::max(1.0, std::fabs(mu));
                    CHECK(std::fabs(bottom_gap(d, k, n) -
                                    (mu - expected_order_stat(d, k, n + 1))) <=
                          tol);
                }
                if (d.moment_existence(n - k, n - 1).exists) {
                    const double dtop = expected_order_stat(d, n - k + 1, n) -
                                        expected_order_stat(d, n - k, n - 1);
                    const double ttol =
                        1e-7 * std::max(1.0, std::fabs(expected_order_stat(
                                                 d, n - k + 1, n)));
                    CHECK(std::fabs(top_gap(d, k, n) - dtop) <= ttol);
                }
            }
    }
}

TEST_CASE("second differences equal direct three-term differences") {
    const Distribution expo = Distribution::exponential(1.0);
    const double direct = oracle::exponential_order_stat(1.0, 2, 3) -
                          2.0 * oracle::exponential_order_stat(1.0, 2, 4) +
                          oracle::exponential_order_stat(1.0, 2, 5);
    CHECK(bottom_second_difference(expo, 2, 3) ==
          doctest::Approx(direct).epsilon(1e-7));

    const Distribution uni = Distribution::uniform(0.0, 1.0);
    const double dtop = oracle::uniform_order_stat(3, 4) -
                        2.0 * oracle::uniform_order_stat(2, 3) +
                        oracle::uniform_order_stat(1, 2);
    CHECK(top_second_difference(uni, 2, 3) == doctest::Approx(dtop).epsilon(1e-7));

    // the reference concavity violation, +0.3 at (k=2, n=3)
    CHECK(top_second_difference(Distribution::pareto(1.0, 0.75), 2, 3) ==
          doctest::Approx(0.3).epsilon(1e-6));
    // and its mirrored non-convexity
    CHECK(bottom_second_difference(Distribution::negated_pareto(1.0, 0.75), 2, 2) ==
          doctest::Approx(-0.3).epsilon(1e-6));
}

TEST_CASE("k=1 second differences keep their unconditional sign") {
    for (const Distribution& d : cross_check_families()) {
        CAPTURE(d.describe());
        for (int n = 2; n <= 7; ++n) {
            CHECK(bottom_second_difference(d, 1, n) >= -1e-10);
            CHECK(top_second_difference(d, 1, n) <= 1e-10);
        }
    }
}

TEST_CASE("certificate integrals: distribution-free full-range values") {
    // The full-range values depend only on (k, n); spot-check that the
    // distribution genuinely drops out.
    const std::vector<Distribution> dists = {Distribution::uniform(0.0, 1.0),
                                             Distribution::normal(0.0, 1.0),
                                             Distribution::pareto(1.0, 0.75)};
    for (const Distribution& d : dists) {
        CAPTURE(d.describe());
        for (int n = 1; n <= 15; ++n)
            for (int k = 1; k <= n; ++k) {
                CHECK(std::fabs(bottom_kernel_tail_integral(d, k, n, -kInf) -
                                oracle::bottom_certificate_full(k, n)) <= 1e-10);
                CHECK(std::fabs(top_kernel_head_integral(d, k, n, kInf) -
                                oracle::top_certificate_full(k, n)) <= 1e-10);
            }
    }
    CHECK(oracle::bottom_certificate_full(1, 1) == doctest::Approx(1.0 / 6.0));
    CHECK(oracle::top_certificate_full(1, 1) == doctest::Approx(-0.5));
}

TEST_CASE("certificate integrals: sign holds at every cut point") {
    std::mt19937_64 rng(99);
    const std::vector<Distribution> dists = {Distribution::uniform(0.0, 1.0),
                                             Distribution::exponential(1.0),
                                             Distribution::normal(0.0, 1.0),
                                             Distribution::pareto(1.0, 0.75),
                                             Distribution::negated_pareto(1.0, 2.0)};
    for (const Distribution& d : dists) {
        CAPTURE(d.describe());
        for (auto [k, n] : {std::pair{1, 1}, {2, 5}, {3, 7}, {4, 9}}) {
            for (int i = 0; i < 20; ++i) {
                const double u =
                    (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
                const double t = d.quantile(u);
                CHECK(bottom_kernel_tail_integral(d, k, n, t) >= -1e-12);
                CHECK(top_kernel_head_integral(d, k, n, t) <= 1e-12);
            }
        }
    }
}

TEST_CASE("certificate integrals: empty ranges") {
    const Distribution uni = Distribution::uniform(0.0, 1.0);
    CHECK(bottom_kernel_tail_integral(uni, 2, 5, 1.0) == 0.0);
    CHECK(top_kernel_head_integral(uni, 2, 5, 0.0) == 0.0);
    CHECK(bottom_kernel_tail_integral(uni, 2, 5, kInf) == 0.0);
    CHECK(top_kernel_head_integral(uni, 2, 5, -kInf) == 0.0);
    // a cut point mid-support, checked against direct polynomial integration
    const double j_half = bottom_kernel_tail_integral(uni, 2, 5, 0.5);
    const double direct = oracle::simpson(
        [](double u) {
            return u * std::pow(1.0 - u, 4) *
                   kernels::bottom_curvature_bracket(2, 5, u);
        },
        0.5, 1.0);
    CHECK(j_half == doctest::Approx(direct).epsilon(1e-8));
    CHECK(j_half >= 0.0);
}

TEST_CASE("curvature bracket sign structure") {
    for (auto [k, n] : {std::pair{1, 4}, {2, 5}, {3, 9}, {5, 12}}) {
        const double u_star = (k - 1.0) / (n + 1.0);
        const double u_dagger = (n - k + 1.0) / static_cast<double>(n);
        for (int i = 1; i <= 100; ++i) {
            const double u = i / 101.0;
            const double bot = kernels::bottom_curvature_bracket(k, n, u);
            const double top = kernels::top_curvature_bracket(k, n, 1.0 - u);
            if (u < u_star) CHECK(bot <= 0.0);
            if (u > u_star) CHECK(bot >= 0.0);
            if (u < u_dagger) CHECK(top <= 0.0);
            if (u > u_dagger) CHECK(top >= 0.0);
        }
    }
}

TEST_CASE("sign change points") {
    const Distribution uni = Distribution::uniform(0.0, 1.0);
    const auto [star_u, dagger_u] = sign_change_points(uni, 2, 3);
    CHECK(star_u == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(dagger_u == doctest::Approx(2.0 / 3.0).epsilon(1e-12));

    // k = 1: both levels sit on the boundary, mapping to the support ends
    const auto [star_n, dagger_n] =
        sign_change_points(Distribution::normal(0.0, 1.0), 1, 6);
    CHECK(star_n == -kInf);
    CHECK(dagger_n == kInf);
    const auto [star_n2, dagger_n2] =
        sign_change_points(Distribution::normal(0.0, 1.0), 2, 6);
    CHECK(std::isfinite(star_n2));
    CHECK(std::isfinite(dagger_n2));

    const auto [star_e, dagger_e] =
        sign_change_points(Distribution::exponential(1.0), 2, 4);
    CHECK(star_e == doctest::Approx(-std::log(1.0 - 0.2)).epsilon(1e-12));
    CHECK(dagger_e == doctest::Approx(-std::log(0.25)).epsilon(1e-12));

    // k = 1 top level hits 1: the support maximum
    const auto [star_m, dagger_m] = sign_change_points(uni, 1, 5);
    CHECK(star_m == 0.0);
    CHECK(dagger_m == 1.0);
}

TEST_CASE("uniform symmetry of order statistics") {
    const Distribution uni = Distribution::uniform(0.0, 1.0);
    for (int n = 1; n <= 9; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(expected_order_stat(uni, k, n) +
                      expected_order_stat(uni, n - k + 1, n) ==
                  doctest::Approx(1.0).epsilon(1e-8));
}

TEST_SUITE_END();
