#pragma once

#include "wradii/types.hpp"

namespace wradii {

/// A real number stored as sign * exp(log_abs). sign == 0 encodes zero.
struct SignedLog {
    int sign = 0;
    double log_abs = 0.0;

    static SignedLog from_value(double v);
    double value() const;
    SignedLog operator*(const SignedLog& o) const;
    SignedLog operator/(const SignedLog& o) const;
    /// Sum computed relative to the larger magnitude, so it never overflows.
    SignedLog operator+(const SignedLog& o) const;
    SignedLog operator-(const SignedLog& o) const;
};

/// ln Gamma(x) for x > 0. Throws DomainError for non-positive or non-finite x.
double log_gamma(double x);

/// 1/Gamma(x) for any finite real x (zero at the poles of Gamma).
double reciprocal_gamma(double x);

/// ln|Gamma(x)| and the sign of Gamma(x); x must not be a non-positive integer.
SignedLog signed_log_gamma(double x);

/// Delta_{a,b}(rho, beta) = a Gamma(beta) Gamma(2 rho + beta) - b Gamma(rho + beta)^2
/// in log form. Needs a, b > 0 and rho, beta > 0.
SignedLog log_delta_ab(double a, double b, const WrightParams& p);
double delta_ab(double a, double b, const WrightParams& p);

/// Xi = (beta+2)^2 Gamma(beta) Gamma(3 rho + beta) Delta_{2(beta+2), beta+4}(rho, beta).
SignedLog log_xi(const WrightParams& p);
double xi(const WrightParams& p);

}  // namespace wradii
