#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wradii/errors.hpp"
#include "wradii/wright_eval.hpp"

using namespace wradii;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("phi reduces to Bessel values") {
    CHECK(phi({1, 1}, 0.0).value == 1.0);
    CHECK(phi({1, 1}, -1.0).value == doctest::Approx(0.22389077914123567).epsilon(1e-15));
    CHECK(phi({1, 2}, -1.0).value == doctest::Approx(0.57672480775687339).epsilon(1e-15));
    // phi(1, 1, z) = I_0(2 sqrt z) for z > 0
    CHECK(phi({1, 1}, 1.0).value == doctest::Approx(2.2795853023360673).epsilon(1e-15));
}

TEST_CASE("phi against the long double oracle") {
    for (double rho : {-0.5, 0.25, 1.0, 2.0})
        for (double beta : {0.3, 1.0, 4.0})
            for (double z : {-8.0, -2.0, -0.3, 0.7, 3.0}) {
                const SeriesValue v = phi({rho, beta}, z);
                const double ref = static_cast<double>(oracle::wright(rho, beta, z));
                INFO("rho=" << rho << " beta=" << beta << " z=" << z);
                CHECK(std::abs(v.value - ref) <= 1e-13 * std::max(1.0, v.abs_sum));
                CHECK(v.truncation_bound <= 1e-15 * std::max(1.0, std::abs(v.value)));
                CHECK(v.terms_used >= 1);
            }
}

TEST_CASE("phi domain") {
    CHECK_THROWS_AS(phi({-1.0, 1.0}, 0.5), DomainError);
    CHECK_THROWS_AS(phi({1.0, 0.0}, 0.5), DomainError);
    CHECK_THROWS_AS(phi({1.0, 1.0}, INFINITY), DomainError);
}

TEST_CASE("leading coefficients of the families") {
    const WrightParams p{0.8, 1.7};
    CHECK(eval(Family::SmallPsi, {1, 1}, 0.0).value == 1.0);
    CHECK(eval(Family::Theta, p, 0.0).value == doctest::Approx(1.0));
    CHECK(eval(Family::OmegaLow, p, 0.0).value == doctest::Approx(1.0));
    CHECK(eval(Family::OmegaCap, p, 0.0).value == doctest::Approx(1.0 / std::tgamma(1.7)));
    for (Family f : {Family::F, Family::G, Family::H}) {
        CHECK(eval(f, p, 0.0).value == 0.0);
        CHECK(eval_derivative(f, p, 0.0, 1).value == doctest::Approx(1.0));
    }
}

TEST_CASE("lambda vanishes at j_{0,1}/2") {
    CHECK(std::abs(eval(Family::Lambda, {1, 1}, 1.20241).value) < 1e-5);
    CHECK(std::abs(eval(Family::Lambda, {1, 1}, 1.2024127788478864).value) < 1e-15);
}

TEST_CASE("lambda is even") {
    const WrightParams p{0.6, 2.2};
    for (double x : {0.1, 0.9, 2.3, 4.0}) CHECK(eval(Family::Lambda, p, x).value == eval(Family::Lambda, p, -x).value);
}

TEST_CASE("psi = (z lambda)' and Upsilon = Psi'") {
    for (double rho : {0.5, 1.0, 2.0})
        for (double beta : {0.5, 1.0, 3.0})
            for (double x = 0.25; x <= 3.0; x += 0.25) {
                const WrightParams p{rho, beta};
                // relative to the sum of |terms|, the scale rounding actually works on
                const SeriesValue lhs = eval(Family::SmallPsi, p, x);
                const double rhs = eval(Family::Lambda, p, x).value + x * eval_derivative(Family::Lambda, p, x, 1).value;
                CHECK(std::abs(lhs.value - rhs) <= 1e-12 * lhs.abs_sum);
                const SeriesValue up = eval(Family::PsiPrime, p, x);
                const double dpsi = eval_derivative(Family::Psi, p, x, 1).value;
                CHECK(std::abs(up.value - dpsi) <= 1e-12 * up.abs_sum);
            }
}

TEST_CASE("g, h and their companions match definitions built from lambda") {
    const WrightParams p{1.3, 0.7};
    const double G = std::tgamma(0.7);
    for (double x : {0.2, 0.8, 1.5}) {
        const double lam = static_cast<double>(oracle::lambda(1.3, 0.7, x));
        const double lam_p = static_cast<double>(oracle::lambda_prime(1.3, 0.7, x));
        CHECK(rel(eval(Family::G, p, x).value, G * x * lam) < 1e-13);
        CHECK(rel(eval_derivative(Family::G, p, x, 1).value, G * (lam + x * lam_p)) < 1e-12);
        const double s = std::sqrt(x);
        CHECK(rel(eval(Family::H, p, x).value, G * x * static_cast<double>(oracle::lambda(1.3, 0.7, s))) < 1e-13);
        // Omega(x) = (x lambda(sqrt x))' = lambda(s) + (s/2) lambda'(s)
        const double omega = static_cast<double>(oracle::lambda(1.3, 0.7, s) + 0.5L * s * oracle::lambda_prime(1.3, 0.7, s));
        CHECK(rel(eval(Family::OmegaCap, p, x).value, omega) < 1e-12);
        // h' = Gamma(beta) Omega and g' = Gamma(beta) psi
        CHECK(rel(eval_derivative(Family::H, p, x, 1).value, G * omega) < 1e-12);
        CHECK(rel(eval_derivative(Family::G, p, x, 1).value, G * eval(Family::SmallPsi, p, x).value) < 1e-13);
    }
}

TEST_CASE("Theta = (z g')' and omega = (z h')'") {
    const WrightParams p{0.9, 2.4};
    for (double x : {0.3, 1.1, 2.0}) {
        const double theta = eval_derivative(Family::G, p, x, 1).value + x * eval_derivative(Family::G, p, x, 2).value;
        CHECK(rel(eval(Family::Theta, p, x).value, theta) < 1e-12);
        const double omega = eval_derivative(Family::H, p, x, 1).value + x * eval_derivative(Family::H, p, x, 2).value;
        CHECK(rel(eval(Family::OmegaLow, p, x).value, omega) < 1e-12);
    }
}

TEST_CASE("f is the beta-th root form and stops at the first zero of lambda") {
    const WrightParams p{1.0, 2.0};
    const double x = 0.9;
    const double expected = std::pow(x * x * std::tgamma(2.0) * static_cast<double>(oracle::lambda(1, 2, x)), 0.5);
    CHECK(rel(eval(Family::F, p, x).value, expected) < 1e-13);
    CHECK_THROWS_AS(eval(Family::F, p, 2.0), DomainError);
    CHECK_THROWS_AS(eval(Family::F, p, -0.1), DomainError);
}

TEST_CASE("derivatives against central differences") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> r(0.5, 2.0), b(0.5, 3.0), xs(0.2, 2.0);
    const double h = 1e-5;
    for (Family f : {Family::Lambda, Family::Psi, Family::PsiPrime, Family::G, Family::H, Family::F}) {
        for (int i = 0; i < 20; ++i) {
            const WrightParams p{r(rng), b(rng)};
            double x = xs(rng);
            if (f == Family::F) x *= 0.4;  // stay inside the positivity interval of lambda
            const double fd = (eval(f, p, x + h).value - eval(f, p, x - h).value) / (2 * h);
            const double d1 = eval_derivative(f, p, x, 1).value;
            INFO(to_string(f) << " rho=" << p.rho << " beta=" << p.beta << " x=" << x);
            CHECK(std::abs(fd - d1) <= 1e-7 * std::max(std::abs(d1), 1e-3));
            const double fd2 =
                (eval_derivative(f, p, x + h, 1).value - eval_derivative(f, p, x - h, 1).value) / (2 * h);
            const double d2 = eval_derivative(f, p, x, 2).value;
            CHECK(std::abs(fd2 - d2) <= 1e-7 * std::max(std::abs(d2), 1e-3));
        }
    }
}

TEST_CASE("derivative limits at the origin") {
    CHECK(eval_derivative(Family::Lambda, {0.7, 1.3}, 0.0, 1).value == 0.0);
    // Psi'(x) ~ beta x^(beta-1)/Gamma(beta) = 2x at rho = 1, beta = 2
    const double x = 1e-6;
    CHECK(eval_derivative(Family::Psi, {1, 2}, x, 1).value == doctest::Approx(2 * x).epsilon(1e-9));
    CHECK_THROWS_AS(eval(Family::PsiPrime, {1, 0.5}, 0.0), DomainError);
}

TEST_CASE("truncation bound is honest") {
    // A stricter reference from the long double oracle must land inside the bound
    // plus rounding of the double sum.
    for (double z : {-12.0, -4.0, 5.0}) {
        const SeriesValue v = phi({0.5, 1.5}, z);
        const double ref = static_cast<double>(oracle::wright(0.5, 1.5, z));
        CHECK(std::abs(v.value - ref) <= v.truncation_bound + 64 * 2.2e-16 * v.abs_sum);
    }
}

TEST_CASE("domain checks on families") {
    CHECK_THROWS_AS(eval(Family::H, {1, 1}, -0.5), DomainError);
    CHECK_THROWS_AS(eval(Family::OmegaCap, {1, 1}, -0.5), DomainError);
    CHECK_THROWS_AS(eval(Family::Psi, {1, 0.5}, -0.5), DomainError);
    CHECK_THROWS_AS(eval(Family::Theta, {-0.5, 1}, 0.5), DomainError);
    CHECK_THROWS_AS(eval_derivative(Family::Lambda, {1, 1}, 0.5, 3), DomainError);
    CHECK_NOTHROW(eval(Family::Lambda, {-0.5, 1}, 0.5));
    CHECK_NOTHROW(eval(Family::G, {1, 1}, -0.5));
}
