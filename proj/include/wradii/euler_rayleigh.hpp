#pragma once

#include <string_view>

#include "wradii/types.hpp"

namespace wradii {

/// Which packaged bound: T2 r*(f), T3 r*(g), T4 r*(h), T6 r^c(g), T7 r^c(h).
enum class Theorem { T2, T3, T4, T6, T7 };

std::string_view to_string(Theorem t);
Theorem parse_theorem(std::string_view s);

/// Family whose positive zeros the power sums run over, and the matching radius.
Family zero_family(Theorem t);
RadiusKind radius_kind(Theorem t);
Norm radius_norm(Theorem t);

/// First three power sums s_k = sum_n zeta_n^(-zero_power * k) of reciprocal zeros.
struct RayleighSums {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
    int zero_power = 2;

    /// s1 > 0, s2 > 0, s3 > 0, s2 <= s1^2 and s2^2 <= s1 s3 (to a relative slack).
    bool valid(double slack = 1e-12) const;
};

/// Euler-Rayleigh bounds on the smallest zero zeta_1 for k = 1, 2:
/// s_k^(-1/(p k)) < zeta_1 < (s_k / s_(k+1))^(1/p), p = zero_power.
struct BoundsReport {
    Theorem theorem = Theorem::T3;
    double lower_k1 = 0.0;
    double lower_k2 = 0.0;
    double upper_k2 = 0.0;
    double upper_k1 = 0.0;
};

/// Closed-form power sums obtained by matching the series coefficients with
/// the logarithmic derivative of the Weierstrass product.
RayleighSums rayleigh_sums(Theorem t, const WrightParams& p);

/// Throws InvariantError if the sums are invalid or the ladder
/// lower_k1 <= lower_k2 <= upper_k2 <= upper_k1 fails.
BoundsReport bounds_from_sums(const RayleighSums& sums, Theorem t);

/// The same bounds from the packaged gamma/Delta expressions, in log space.
BoundsReport bounds_closed_form(Theorem t, const WrightParams& p);

/// T2 bounds built on power sums that lack the 1/beta factor of the true
/// sums. Coincides with bounds_closed_form(T2) only at beta = 1. The commonly
/// quoted Bessel-case formulas for r*(f) follow this form.
BoundsReport bounds_t2_as_printed(const WrightParams& p);

}  // namespace wradii
