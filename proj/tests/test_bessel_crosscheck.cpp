#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wradii/bessel_crosscheck.hpp"
#include "wradii/errors.hpp"
#include "wradii/radii_solver.hpp"

using namespace wradii;

TEST_CASE("bessel_j reference values") {
    CHECK(bessel_j(0, 0) == 1.0);
    CHECK(bessel_j(0, 2) == doctest::Approx(0.22389077914123567).epsilon(1e-15));
    CHECK(bessel_j(1, 2) == doctest::Approx(0.57672480775687339).epsilon(1e-15));
    // J_{1/2}(x) = sqrt(2/(pi x)) sin x
    for (double x : {0.3, 4.0, 17.5})
        CHECK(bessel_j(0.5, x) == doctest::Approx(std::sqrt(2 / (M_PI * x)) * std::sin(x)).epsilon(1e-13));
    CHECK(bessel_j(0, 20) == doctest::Approx(0.16702466434058316).epsilon(1e-13));
    CHECK(bessel_j(3, 20) == doctest::Approx(std::cyl_bessel_j(3.0, 20.0)).epsilon(1e-12));
}

TEST_CASE("bessel_j_prime against the recurrence J' = (J_{nu-1} - J_{nu+1})/2") {
    for (double nu : {0.5, 1.0, 2.5})
        for (double x : {0.4, 3.0, 9.0})
            CHECK(bessel_j_prime(nu, x) == doctest::Approx(0.5 * (bessel_j(nu - 1, x) - bessel_j(nu + 1, x))).epsilon(1e-12));
    CHECK(bessel_j_prime(0, 0) == 0.0);
    CHECK(bessel_j_prime(1, 0) == 0.5);
}

TEST_CASE("bessel domain") {
    CHECK_THROWS_AS(bessel_j(-1.0, 1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(bessel_j(-0.5, 0.0), DomainError);
}

TEST_CASE("reduction residuals") {
    CHECK(verify_reduction(0, 1).relative <= 1e-12);
    CHECK(verify_reduction(2, 0.5).relative <= 1e-12);
    const ReductionCheck tiny = verify_reduction(0, 1e-8);
    CHECK(tiny.wright == doctest::Approx(1.0));
    CHECK(tiny.bessel == doctest::Approx(1.0));
    for (double nu : {0.0, 0.5, 1.0, 2.0, 5.0})
        for (int i = 1; i <= 30; ++i) CHECK(verify_reduction(nu, 0.1 * i).relative <= 1e-12);
}

TEST_CASE("corollary expressions at small nu") {
    SUBCASE("T4 at nu = 1 is (1, 2)") {
        const BoundsReport c = corollary_bounds(Theorem::T4, 1.0);
        CHECK(c.lower_k1 == 1.0);
        CHECK(c.upper_k1 == 2.0);
    }
    SUBCASE("T3 at nu = 0") {
        const BoundsReport c = corollary_bounds(Theorem::T3, 0.0);
        CHECK(c.lower_k1 == doctest::Approx(std::sqrt(1.0 / 3)));
        CHECK(c.upper_k1 == doctest::Approx(std::sqrt(6.0 / 13)));
    }
    SUBCASE("T6 at nu = 0") { CHECK(corollary_bounds(Theorem::T6, 0.0).upper_k1 == doctest::Approx(3 * std::sqrt(2.0 / 137))); }
}

TEST_CASE("corollaries for g, h and the convex cases reproduce the closed forms") {
    for (double nu : {0.0, 0.5, 1.0, 2.0, 5.0})
        for (Theorem t : {Theorem::T3, Theorem::T4, Theorem::T6, Theorem::T7}) {
            const BoundsReport a = bounds_closed_form(t, {1.0, nu + 1.0});
            const BoundsReport c = corollary_bounds(t, nu);
            INFO(to_string(t) << " nu=" << nu);
            CHECK(a.lower_k1 == doctest::Approx(c.lower_k1).epsilon(1e-12));
            CHECK(a.lower_k2 == doctest::Approx(c.lower_k2).epsilon(1e-12));
            CHECK(a.upper_k2 == doctest::Approx(c.upper_k2).epsilon(1e-12));
            CHECK(a.upper_k1 == doctest::Approx(c.upper_k1).epsilon(1e-12));
        }
}

TEST_CASE("the displayed r*(f) corollary follows the form without 1/beta") {
    for (double nu : {0.0, 0.5, 1.0, 2.0}) {
        const BoundsReport legacy = bounds_t2_as_printed({1.0, nu + 1.0});
        const BoundsReport c = corollary_bounds(Theorem::T2, nu);
        CHECK(legacy.lower_k1 == doctest::Approx(c.lower_k1).epsilon(1e-12));
        CHECK(legacy.upper_k1 == doctest::Approx(c.upper_k1).epsilon(1e-12));
        CHECK(legacy.lower_k2 == doctest::Approx(c.lower_k2).epsilon(1e-12));
    }
}

TEST_CASE("Bessel-side starlikeness roots equal the Wright-side radii") {
    for (double nu : {0.0, 0.5, 1.0, 2.0})
        for (Norm n : {Norm::F, Norm::G, Norm::H})
            for (double alpha : {0.0, 0.3, 0.7}) {
                const double w = radius_starlike({RadiusKind::Starlike, n, {1.0, nu + 1.0}, alpha}).value;
                CHECK(bessel_starlike_root(n, nu, alpha) == doctest::Approx(w).epsilon(1e-10));
            }
}

TEST_CASE("verify_corollaries passes everywhere except the r*(f) corollary for nu != 0") {
    const CorollaryReport r0 = verify_corollaries(0.0);
    CHECK(r0.passed());
    const CorollaryReport r1 = verify_corollaries(1.0);
    for (const auto& c : r1.checks) {
        INFO(c.name);
        if (c.name.rfind("T2 ", 0) != 0) CHECK(c.passed);
    }
}
