#include "wradii/euler_rayleigh.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "wradii/errors.hpp"
#include "wradii/gamma_kernel.hpp"

namespace wradii {

std::string_view to_string(Theorem t) {
    switch (t) {
        case Theorem::T2: return "T2";
        case Theorem::T3: return "T3";
        case Theorem::T4: return "T4";
        case Theorem::T6: return "T6";
        case Theorem::T7: return "T7";
    }
    return "?";
}

Theorem parse_theorem(std::string_view s) {
    std::string key(s);
    std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::toupper(c); });
    if (key == "T2") return Theorem::T2;
    if (key == "T3") return Theorem::T3;
    if (key == "T4") return Theorem::T4;
    if (key == "T6") return Theorem::T6;
    if (key == "T7") return Theorem::T7;
    throw DomainError("unknown theorem '" + std::string(s) + "'");
}

Family zero_family(Theorem t) {
    switch (t) {
        case Theorem::T2: return Family::PsiPrime;
        case Theorem::T3: return Family::SmallPsi;
        case Theorem::T4: return Family::OmegaCap;
        case Theorem::T6: return Family::Theta;
        case Theorem::T7: return Family::OmegaLow;
    }
    return Family::Lambda;
}

RadiusKind radius_kind(Theorem t) {
    return (t == Theorem::T6 || t == Theorem::T7) ? RadiusKind::Convex : RadiusKind::Starlike;
}

Norm radius_norm(Theorem t) {
    switch (t) {
        case Theorem::T2: return Norm::F;
        case Theorem::T3:
        case Theorem::T6: return Norm::G;
        case Theorem::T4:
        case Theorem::T7: return Norm::H;
    }
    return Norm::G;
}

bool RayleighSums::valid(double slack) const {
    if (!(s1 > 0.0 && s2 > 0.0 && s3 > 0.0)) return false;
    if (!std::isfinite(s1) || !std::isfinite(s2) || !std::isfinite(s3)) return false;
    return s2 <= s1 * s1 * (1.0 + slack) && s2 * s2 <= s1 * s3 * (1.0 + slack);
}

namespace {

int zero_power(Theorem t) { return (t == Theorem::T4 || t == Theorem::T7) ? 1 : 2; }

// s1 = a1 A,  s2 = a2 A^2 - b2 B,  s3 = a3 A^3 - b3 A B + c3 C
// with A = G(b)/G(r+b), B = G(b)/G(2r+b), C = G(b)/G(3r+b).
struct SumCoefficients {
    double a1, a2, b2, a3, b3, c3;
};

SumCoefficients sum_coefficients(Theorem t, double beta) {
    switch (t) {
        case Theorem::T2: {
            const double b = beta;
            const double u = (b + 2.0) / b;
            return {u, u * u, (b + 4.0) / b, u * u * u, 3.0 * (b + 2.0) * (b + 4.0) / (2.0 * b * b),
                    (b + 6.0) / (2.0 * b)};
        }
        case Theorem::T3: return {3.0, 9.0, 5.0, 27.0, 45.0 / 2.0, 7.0 / 2.0};
        case Theorem::T4: return {2.0, 4.0, 3.0, 8.0, 9.0, 2.0};
        case Theorem::T6: return {9.0, 81.0, 25.0, 729.0, 675.0 / 2.0, 49.0 / 2.0};
        case Theorem::T7: return {4.0, 16.0, 9.0, 64.0, 54.0, 8.0};
    }
    return {};
}

void check_ladder(const BoundsReport& r) {
    constexpr double slack = 1e-12;
    const bool finite = std::isfinite(r.lower_k1) && std::isfinite(r.lower_k2) && std::isfinite(r.upper_k2) &&
                        std::isfinite(r.upper_k1);
    const bool ordered = r.lower_k1 > 0.0 && r.lower_k1 <= r.lower_k2 * (1.0 + slack) &&
                         r.lower_k2 <= r.upper_k2 * (1.0 + slack) && r.upper_k2 <= r.upper_k1 * (1.0 + slack);
    if (!finite || !ordered) {
        std::ostringstream msg;
        msg.precision(17);
        msg << to_string(r.theorem) << " ladder out of order: " << r.lower_k1 << ", " << r.lower_k2 << ", "
            << r.upper_k2 << ", " << r.upper_k1;
        throw InvariantError(msg.str());
    }
}

// Logs of Gamma(beta + j rho), j = 0..3.
struct GammaLogs {
    double g0, g1, g2, g3;
    explicit GammaLogs(const WrightParams& p)
        : g0(log_gamma(p.beta)),
          g1(log_gamma(p.rho + p.beta)),
          g2(log_gamma(2.0 * p.rho + p.beta)),
          g3(log_gamma(3.0 * p.rho + p.beta)) {}
};

SignedLog positive(double log_abs) { return {1, log_abs}; }
SignedLog constant(double c) { return SignedLog::from_value(c); }

// Converts a ratio expected to be positive into its log, or throws.
double log_of_positive(const SignedLog& v, const char* what) {
    if (v.sign <= 0) throw InvariantError(std::string("non-positive quantity in closed form: ") + what);
    return v.log_abs;
}

BoundsReport make_report(Theorem t, const SignedLog& lower1, const SignedLog& upper1, const SignedLog& lower2,
                         const SignedLog& upper2, int power) {
    // Each argument is the quantity whose 1/(power k) root is the bound.
    const double inv = 1.0 / power;
    BoundsReport r;
    r.theorem = t;
    r.lower_k1 = std::exp(inv * log_of_positive(lower1, "lower k=1"));
    r.upper_k1 = std::exp(inv * log_of_positive(upper1, "upper k=1"));
    r.lower_k2 = std::exp(0.5 * inv * log_of_positive(lower2, "lower k=2"));
    r.upper_k2 = std::exp(inv * log_of_positive(upper2, "upper k=2"));
    return r;
}

}  // namespace

RayleighSums rayleigh_sums(Theorem t, const WrightParams& p) {
    require_zero_domain(p);
    const GammaLogs g(p);
    const double A = std::exp(g.g0 - g.g1);
    const double B = std::exp(g.g0 - g.g2);
    const double C = std::exp(g.g0 - g.g3);
    const SumCoefficients c = sum_coefficients(t, p.beta);
    RayleighSums s;
    s.zero_power = zero_power(t);
    s.s1 = c.a1 * A;
    s.s2 = c.a2 * A * A - c.b2 * B;
    s.s3 = c.a3 * A * A * A - c.b3 * A * B + c.c3 * C;
    return s;
}

BoundsReport bounds_from_sums(const RayleighSums& sums, Theorem t) {
    if (!sums.valid()) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "invalid power sums " << sums.s1 << ", " << sums.s2 << ", " << sums.s3;
        throw InvariantError(msg.str());
    }
    const double inv = 1.0 / sums.zero_power;
    BoundsReport r;
    r.theorem = t;
    r.lower_k1 = std::pow(sums.s1, -inv);
    r.lower_k2 = std::pow(sums.s2, -0.5 * inv);
    r.upper_k1 = std::pow(sums.s1 / sums.s2, inv);
    r.upper_k2 = std::pow(sums.s2 / sums.s3, inv);
    check_ladder(r);
    return r;
}

BoundsReport bounds_closed_form(Theorem t, const WrightParams& p) {
    require_zero_domain(p);
    const GammaLogs g(p);
    const double b = p.beta;
    // Gamma(rho+beta)^3 Gamma(2rho+beta), shared by every k = 2 upper bound
    const SignedLog g1cube_g2 = positive(3.0 * g.g1 + g.g2);
    const SignedLog g0_g3 = positive(g.g0 + g.g3);

    BoundsReport r;
    switch (t) {
        case Theorem::T2: {
            const SignedLog d = log_delta_ab((b + 2.0) * (b + 2.0), b * (b + 4.0), p);
            const SignedLog x = constant(b + 2.0) * g0_g3 * log_delta_ab(2.0 * (b + 2.0) * (b + 2.0), 3.0 * b * (b + 4.0), p);
            r = make_report(t, constant(b) * positive(g.g1 - g.g0) / constant(b + 2.0),
                            constant(b * (b + 2.0)) * positive(g.g1 + g.g2) / d,
                            constant(b * b) * positive(2.0 * g.g1 + g.g2 - g.g0) / d,
                            constant(2.0 * b) * positive(g.g1 + g.g3) * d /
                                (constant(b * b * (b + 6.0)) * g1cube_g2 + x),
                            2);
            break;
        }
        case Theorem::T3: {
            const SignedLog d95 = log_delta_ab(9.0, 5.0, p);
            r = make_report(t, positive(g.g1 - g.g0) / constant(3.0), constant(3.0) * positive(g.g1 + g.g2) / d95,
                            positive(2.0 * g.g1 + g.g2 - g.g0) / d95,
                            constant(2.0) * positive(g.g1 + g.g3) * d95 /
                                (constant(9.0) * g0_g3 * log_delta_ab(6.0, 5.0, p) + constant(7.0) * g1cube_g2),
                            2);
            break;
        }
        case Theorem::T4: {
            const SignedLog d43 = log_delta_ab(4.0, 3.0, p);
            r = make_report(t, positive(g.g1 - g.g0) / constant(2.0), constant(2.0) * positive(g.g1 + g.g2) / d43,
                            positive(2.0 * g.g1 + g.g2 - g.g0) / d43,
                            positive(g.g1 + g.g3) * d43 /
                                (g0_g3 * log_delta_ab(8.0, 9.0, p) + constant(2.0) * g1cube_g2),
                            1);
            break;
        }
        case Theorem::T6: {
            const SignedLog d = log_delta_ab(81.0, 25.0, p);
            r = make_report(t, positive(g.g1 - g.g0) / constant(9.0), constant(9.0) * positive(g.g1 + g.g2) / d,
                            positive(2.0 * g.g1 + g.g2 - g.g0) / d,
                            constant(2.0) * positive(g.g1 + g.g3) * d /
                                (g0_g3 * log_delta_ab(1458.0, 675.0, p) + constant(49.0) * g1cube_g2),
                            2);
            break;
        }
        case Theorem::T7: {
            const SignedLog d = log_delta_ab(16.0, 9.0, p);
            r = make_report(t, positive(g.g1 - g.g0) / constant(4.0), constant(4.0) * positive(g.g1 + g.g2) / d,
                            positive(2.0 * g.g1 + g.g2 - g.g0) / d,
                            positive(g.g1 + g.g3) * d /
                                (constant(8.0) * g1cube_g2 + constant(2.0) * g0_g3 * log_delta_ab(32.0, 27.0, p)),
                            1);
            break;
        }
    }
    check_ladder(r);
    return r;
}

BoundsReport bounds_t2_as_printed(const WrightParams& p) {
    require_zero_domain(p);
    const GammaLogs g(p);
    const double b = p.beta;
    const SignedLog d = log_delta_ab((b + 2.0) * (b + 2.0), b + 4.0, p);
    return make_report(Theorem::T2, positive(g.g1 - g.g0) / constant(b + 2.0),
                       constant(b * (b + 2.0)) * positive(g.g1 + g.g2) / d,
                       constant(b) * positive(2.0 * g.g1 + g.g2 - g.g0) / d,
                       constant(2.0 * b) * positive(g.g1 + g.g3) * d /
                           (constant(b * (b + 6.0)) * positive(3.0 * g.g1 + g.g2) + log_xi(p)),
                       2);
}

}  // namespace wradii
