#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wradii/errors.hpp"
#include "wradii/euler_rayleigh.hpp"
#include "wradii/zero_finder.hpp"

using namespace wradii;

// Zeros of J_0 and J_1 (rounded to 16 digits), halved for lambda_{1,1} and lambda_{1,2}.
static constexpr double j01 = 2.404825557695773, j02 = 5.520078110286311, j03 = 8.653727912911012;
static constexpr double j11 = 3.831705970207512;

TEST_CASE("first lambda zeros at rho = 1 are halved Bessel zeros") {
    const ZeroSequence z = first_zeros(Family::Lambda, {1, 1}, 3);
    REQUIRE(z.zeros.size() == 3);
    CHECK(z.zeros[0] == doctest::Approx(j01 / 2).epsilon(1e-12));
    CHECK(z.zeros[1] == doctest::Approx(j02 / 2).epsilon(1e-12));
    CHECK(z.zeros[2] == doctest::Approx(j03 / 2).epsilon(1e-12));
    CHECK(first_zeros(Family::Lambda, {1, 2}, 1).zeros[0] == doctest::Approx(j11 / 2).epsilon(1e-12));
}

TEST_CASE("brackets certify each zero") {
    for (Family f : {Family::Lambda, Family::PsiPrime, Family::SmallPsi, Family::OmegaCap, Family::Theta,
                     Family::OmegaLow, Family::Psi, Family::G, Family::H}) {
        const WrightParams p{0.7, 1.6};
        const ZeroSequence z = first_zeros(f, p, 4);
        INFO(to_string(f));
        REQUIRE(z.zeros.size() == 4);
        REQUIRE(z.brackets.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) {
            const Bracket b = z.brackets[i];
            CHECK(b.lo <= z.zeros[i]);
            CHECK(z.zeros[i] <= b.hi);
            CHECK(b.hi - b.lo <= 1e-12 * b.hi);
            // the certificate is the kernel sign, which is what the finder itself trusts
            KernelSign sign(series_form(f, p), p);
            CHECK(sign.at(b.lo).sign * sign.at(b.hi).sign < 0);
            if (i > 0) CHECK(z.zeros[i] > z.zeros[i - 1]);
        }
    }
}

TEST_CASE("Theta's first zero sits before the first lambda zero") {
    for (double rho : {0.5, 1.0, 3.0})
        for (double beta : {0.3, 1.0, 6.0}) {
            const WrightParams p{rho, beta};
            CHECK(eval(Family::Theta, p, 0.0).value == doctest::Approx(1.0));
            const double t = first_zeros(Family::Theta, p, 1).zeros[0];
            CHECK(t > 0.0);
            CHECK(t < first_zeros(Family::Lambda, p, 1).zeros[0]);
            CHECK(first_zeros(Family::SmallPsi, p, 1).zeros[0] < first_zeros(Family::Lambda, p, 1).zeros[0]);
        }
}

TEST_CASE("zeros agree with an independent long double scan") {
    const long double rho = 1.7, beta = 0.6;
    const long double ref = oracle::first_root([&](long double z) { return oracle::lambda(rho, beta, z); }, 1e-3L, 1e-3L);
    CHECK(first_zeros(Family::Lambda, {1.7, 0.6}, 1).zeros[0] == doctest::Approx(static_cast<double>(ref)).epsilon(1e-12));
}

TEST_CASE("far zeros stay accurate where doubles cancel") {
    // 40th zero of lambda_{1,1} is j_{0,40}/2; McMahon's expansion gives it to ~1e-12.
    const double b = (40 - 0.25) * M_PI;
    const double mcmahon = b + 1.0 / (8 * b) - 124.0 / (3 * std::pow(8 * b, 3));
    const ZeroSequence z = first_zeros(Family::Lambda, {1, 1}, 40);
    CHECK(z.zeros[39] == doctest::Approx(mcmahon / 2).epsilon(1e-11));
}

TEST_CASE("Rayleigh partial sums approach the closed form from below") {
    const WrightParams p{1.0, 1.0};
    const ZeroSequence g = first_zeros(Family::SmallPsi, p, 50);
    double s = 0.0, previous = 0.0;
    for (double z : g.zeros) {
        s += 1.0 / (z * z);
        CHECK(s > previous);
        previous = s;
    }
    const double delta1 = rayleigh_sums(Theorem::T3, p).s1;
    CHECK(s < delta1);
    CHECK(s > 0.99 * delta1);
}

TEST_CASE("interlacing of Psi' and lambda zeros") {
    SUBCASE("Bessel case") { CHECK(check_interlacing({1, 1}, 3).interlaced); }
    SUBCASE("small parameters") { CHECK(check_interlacing({0.5, 0.5}, 3).interlaced); }
    SUBCASE("n = 1 is a single comparison") {
        const InterlacingReport r = check_interlacing({2.0, 5.0}, 1);
        CHECK(r.interlaced);
        REQUIRE(r.psi_prime_zeros.size() == 1);
        CHECK(r.psi_prime_zeros[0] < r.lambda_zeros[0]);
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(first_zeros(Family::F, {1, 1}, 1), DomainError);
    CHECK_THROWS_AS(first_zeros(Family::Lambda, {-0.5, 1}, 1), DomainError);
    CHECK_THROWS_AS(first_zeros(Family::Lambda, {1, 1}, 0), DomainError);
    ZeroOptions tight;
    tight.max_ceiling_doublings = 0;
    // Omega's zeros grow like n^(1+rho); ten of them do not fit under the first ceiling at rho = 2
    CHECK_THROWS_AS(first_zeros(Family::OmegaCap, {2, 1}, 10, tight), ScanExhaustedError);
    CHECK(first_zeros(Family::OmegaCap, {2, 1}, 10).zeros.size() == 10);
}
