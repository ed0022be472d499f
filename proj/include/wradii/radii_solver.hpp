#pragma once

#include <span>
#include <vector>

#include "wradii/types.hpp"
#include "wradii/zero_finder.hpp"

namespace wradii {

/// Radius of starlikeness or convexity of order alpha of one normalization.
struct RadiusQuery {
    RadiusKind kind = RadiusKind::Starlike;
    Norm norm = Norm::G;
    WrightParams params;
    double alpha = 0.0;
};

struct RadiusResult {
    double value = 0.0;
    Bracket bracket;
    /// |target(value)| for the logarithmic-derivative form of the equation.
    double residual = 0.0;
    /// First zero of the denominator family; the radius lies below it.
    double upper_domain_zero = 0.0;
    int iterations = 0;
};

struct RadiusOptions {
    double rel_tol = 1e-12;
    int max_bisections = 200;
};

/// Defining equation in logarithmic-derivative form, e.g. 1 + r lambda'(r)/lambda(r) - alpha
/// for the starlike g case. Positive near 0, decreasing to -inf at the domain zero.
/// Starlike h is expressed in s = sqrt(r); every other case in r itself.
double radius_target(const RadiusQuery& q, double t);

RadiusResult radius_starlike(const RadiusQuery& q, const RadiusOptions& opts = {});
RadiusResult radius_convex(const RadiusQuery& q, const RadiusOptions& opts = {});
RadiusResult radius(const RadiusQuery& q, const RadiusOptions& opts = {});

/// Radii for a list of orders; the domain zero is computed once.
std::vector<RadiusResult> alpha_profile(RadiusKind kind, Norm norm, const WrightParams& p,
                                        std::span<const double> alphas, const RadiusOptions& opts = {});

}  // namespace wradii
