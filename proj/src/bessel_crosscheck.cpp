#include "wradii/bessel_crosscheck.hpp"

#include <algorithm>
#include <array>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <sstream>

#include "wradii/errors.hpp"
#include "wradii/radii_solver.hpp"
#include "wradii/wright_eval.hpp"

namespace wradii {

namespace {

using Big = boost::multiprecision::cpp_bin_float_100;

void require_bessel_domain(double nu, double x) {
    if (!(nu > -1.0) || !std::isfinite(nu)) throw DomainError("bessel order must satisfy nu > -1");
    if (!(x >= 0.0) || !std::isfinite(x)) throw DomainError("bessel argument must be finite and >= 0");
}

// Sum over k of c_k (x/2)^(2k+nu) / (k! Gamma(k+nu+1)) with c_k = (-1)^k w(k),
// divided by x^shift.  w = 1 gives J, w = (2k+nu)/2 with shift 1 gives J'.
template <class Weight>
double ascending_series(double nu, double x, Weight weight, int shift) {
    const Big half = Big(x) / 2;
    const Big q = half * half;
    Big term = boost::multiprecision::pow(half, Big(nu) - shift) / boost::math::tgamma(Big(nu) + 1);
    if (shift == 1) term /= 2;
    Big sum = 0;
    const Big eps = std::numeric_limits<Big>::epsilon();
    for (int k = 0; k < 100000; ++k) {
        const Big contribution = term * weight(k);
        sum += contribution;
        if (k > half && abs(contribution) <= eps * abs(sum)) break;
        term *= -q / ((k + 1) * (k + 1 + Big(nu)));
    }
    return static_cast<double>(sum);
}

}  // namespace

double bessel_j(double nu, double x) {
    require_bessel_domain(nu, x);
    if (x == 0.0) {
        if (nu == 0.0) return 1.0;
        if (nu > 0.0) return 0.0;
        throw DomainError("J_nu(0) is unbounded for -1 < nu < 0");
    }
    return ascending_series(nu, x, [](int) { return Big(1); }, 0);
}

double bessel_j_prime(double nu, double x) {
    require_bessel_domain(nu, x);
    if (x == 0.0) {
        if (nu == 0.0 || nu > 1.0) return 0.0;
        if (nu == 1.0) return 0.5;
        throw DomainError("J'_nu(0) is unbounded for -1 < nu < 1, nu != 0");
    }
    return ascending_series(nu, x, [nu](int k) { return Big(2 * k + nu) ; }, 1);
}

ReductionCheck verify_reduction(double nu, double z) {
    if (!(z > 0.0)) throw DomainError("reduction check needs z > 0");
    ReductionCheck c;
    c.wright = eval(Family::Lambda, WrightParams{1.0, 1.0 + nu}, z).value;
    c.bessel = std::pow(z, -nu) * bessel_j(nu, 2.0 * z);
    c.residual = std::abs(c.wright - c.bessel);
    c.relative = c.residual / std::abs(c.bessel);
    return c;
}

BoundsReport corollary_bounds(Theorem t, double nu) {
    if (!(nu > -1.0)) throw DomainError("corollaries need nu > -1");
    const double n = nu;
    BoundsReport r;
    r.theorem = t;
    switch (t) {
        case Theorem::T2: {
            const double p3 = n * n * n + 7 * n * n + 15 * n + 13;
            const double p5 = std::pow(n, 5) + 15 * std::pow(n, 4) + 80 * n * n * n + 222 * n * n + 319 * n + 196;
            r.lower_k1 = std::sqrt((n + 1) / (n + 3));
            r.upper_k1 = (n + 1) * std::sqrt((n + 2) * (n + 3) / p3);
            r.lower_k2 = std::pow(std::pow(n + 1, 3) * (n + 2) / p3, 0.25);
            r.upper_k2 = (n + 1) * std::sqrt(2 * (n + 3) * p3 / p5);
            break;
        }
        case Theorem::T3:
            r.lower_k1 = std::sqrt((n + 1) / 3);
            r.upper_k1 = std::sqrt(3 * (n + 1) * (n + 2) / (4 * n + 13));
            r.lower_k2 = std::pow((n + 1) * (n + 1) * (n + 2) / (4 * n + 13), 0.25);
            r.upper_k2 = std::sqrt((n + 1) * (n + 3) * (4 * n + 13) / (2 * (4 * n * n + 26 * n + 49)));
            break;
        case Theorem::T4:
            r.lower_k1 = (n + 1) / 2;
            r.upper_k1 = 2 * (n + 1) * (n + 2) / (n + 5);
            r.lower_k2 = (n + 1) * std::sqrt(n + 2) / std::sqrt(n + 5);
            r.upper_k2 = (n + 1) * (n + 3) * (n + 5) / (n * n + 8 * n + 23);
            break;
        case Theorem::T6:
            r.lower_k1 = std::sqrt(n + 1) / 3;
            r.upper_k1 = 3 * std::sqrt((n + 1) * (n + 2) / (56 * n + 137));
            r.lower_k2 = std::pow((n + 1) * (n + 1) * (n + 2) / (56 * n + 137), 0.25);
            r.upper_k2 = std::sqrt((n + 1) * (n + 3) * (56 * n + 137) / (2 * (208 * n * n + 1172 * n + 1693)));
            break;
        case Theorem::T7:
            r.lower_k1 = (n + 1) / 4;
            r.upper_k1 = 4 * (n + 1) * (n + 2) / (7 * n + 23);
            r.lower_k2 = std::sqrt((n + 1) * (n + 1) * (n + 2) / (7 * n + 23));
            r.upper_k2 = (n + 1) * (n + 3) * (7 * n + 23) / (2 * (9 * n * n + 60 * n + 115));
            break;
    }
    return r;
}

double bessel_starlike_root(Norm norm, double nu, double alpha) {
    if (!(alpha >= 0.0 && alpha < 1.0)) throw DomainError("alpha must lie in [0, 1)");
    const auto equation = [&](double z) {
        const double w = norm == Norm::H ? 2.0 * std::sqrt(z) : 2.0 * z;
        double c = 0.0;
        switch (norm) {
            case Norm::F: c = 1.0 - alpha * (nu + 1.0); break;
            case Norm::G: c = 1.0 - alpha - nu; break;
            case Norm::H: c = 2.0 - 2.0 * alpha - nu; break;
        }
        return w * bessel_j_prime(nu, w) + c * bessel_j(nu, w);
    };
    // The equation starts positive (it behaves like (1 - alpha) J near 0) and
    // turns negative before the first zero of J; walk up to the first sign change.
    const double step = norm == Norm::H ? 0.01 * (nu + 1.0) : 0.01 * std::sqrt(nu + 1.0);
    double lo = step * 1e-3;
    double hi = lo;
    while (equation(hi) > 0.0) {
        lo = hi;
        hi += step;
        if (hi > 1e4) throw ConvergenceError("no sign change in the Bessel starlikeness equation");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
        const double mid = 0.5 * (lo + hi);
        (equation(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

bool CorollaryReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CorollaryCheck& c) { return c.passed; });
}

namespace {

void add_relative(CorollaryReport& rep, std::string name, double computed, double expected, double tol) {
    CorollaryCheck c{std::move(name), computed, expected, 0.0, tol, false};
    c.error = std::abs(computed - expected) / std::abs(expected);
    c.passed = c.error <= tol;
    rep.checks.push_back(std::move(c));
}

// Passes when lower < value < upper; error is the signed distance outside.
void add_inside(CorollaryReport& rep, std::string name, double value, double lower, double upper) {
    CorollaryCheck c{std::move(name), value, 0.5 * (lower + upper), 0.0, 0.0, false};
    c.error = std::max({lower - value, value - upper, 0.0});
    c.passed = lower < value && value < upper;
    rep.checks.push_back(std::move(c));
}

}  // namespace

CorollaryReport verify_corollaries(double nu) {
    CorollaryReport rep;
    rep.nu = nu;
    const WrightParams p{1.0, nu + 1.0};
    const std::string at = "(nu=" + [&] {
        std::ostringstream s;
        s << nu;
        return s.str();
    }() + ")";

    for (Theorem t : {Theorem::T2, Theorem::T3, Theorem::T4, Theorem::T6, Theorem::T7}) {
        const std::string tag(to_string(t));
        const BoundsReport closed = bounds_closed_form(t, p);
        const BoundsReport shown = corollary_bounds(t, nu);
        add_relative(rep, tag + " lower_k1 " + at, closed.lower_k1, shown.lower_k1, 1e-12);
        add_relative(rep, tag + " lower_k2 " + at, closed.lower_k2, shown.lower_k2, 1e-12);
        add_relative(rep, tag + " upper_k2 " + at, closed.upper_k2, shown.upper_k2, 1e-12);
        add_relative(rep, tag + " upper_k1 " + at, closed.upper_k1, shown.upper_k1, 1e-12);

        const double r = radius(RadiusQuery{radius_kind(t), radius_norm(t), p, 0.0}).value;
        add_inside(rep, tag + " radius in k=1 bracket " + at, r, shown.lower_k1, shown.upper_k1);
        add_inside(rep, tag + " radius in k=2 bracket " + at, r, shown.lower_k2, shown.upper_k2);
    }

    for (Norm norm : {Norm::F, Norm::G, Norm::H}) {
        for (double alpha : {0.0, 0.3, 0.7}) {
            std::ostringstream name;
            name << "starlike " << to_string(norm) << " root alpha=" << alpha << " " << at;
            const double wright = radius_starlike(RadiusQuery{RadiusKind::Starlike, norm, p, alpha}).value;
            add_relative(rep, name.str(), wright, bessel_starlike_root(norm, nu, alpha), 1e-10);
        }
    }

    // phi_nu(z) = 2^nu Gamma(nu+1) z^(1-nu) J_nu(z),  Phi_nu(z) = 2^nu Gamma(nu+1) z^(1-nu/2) J_nu(sqrt z)
    const double c = std::pow(2.0, nu) * std::tgamma(nu + 1.0);
    for (int i = 1; i <= 10; ++i) {
        const double z = 0.1 * i;
        const double phi_nu = c * std::pow(2.0 * z, 1.0 - nu) * bessel_j(nu, 2.0 * z);
        const double big_phi = c * std::pow(4.0 * z, 1.0 - 0.5 * nu) * bessel_j(nu, std::sqrt(4.0 * z));
        std::ostringstream zs;
        zs << " z=" << z << " " << at;
        add_relative(rep, "phi_nu(2z) = 2 g(z)" + zs.str(), phi_nu, 2.0 * eval(Family::G, p, z).value, 1e-12);
        add_relative(rep, "Phi_nu(4z) = 4 h(z)" + zs.str(), big_phi, 4.0 * eval(Family::H, p, z).value, 1e-12);
    }
    return rep;
}

}  // namespace wradii
