#pragma once

#include <string>
#include <vector>

#include "wradii/euler_rayleigh.hpp"

namespace wradii {

// Bessel J_nu from its own ascending series in 100-digit binary floating point.
// Nothing here goes through the Wright series code, so agreement between the
// two is evidence rather than tautology.
double bessel_j(double nu, double x);
// Term-wise derivative of the same series.
double bessel_j_prime(double nu, double x);

struct ReductionCheck {
    double wright = 0.0;    // lambda_{1,1+nu}(z)
    double bessel = 0.0;    // z^-nu J_nu(2z)
    double residual = 0.0;  // |wright - bessel|
    double relative = 0.0;  // residual / |bessel|
};

ReductionCheck verify_reduction(double nu, double z);

// The four bounds exactly as the rho = 1, beta = nu + 1 corollaries display them.
BoundsReport corollary_bounds(Theorem t, double nu);

// Smallest positive root of the Bessel-side starlikeness equations
//   F: 2z J'(2z) + (1 - alpha (nu+1)) J(2z) = 0
//   G: 2z J'(2z) + (1 - alpha - nu) J(2z) = 0
//   H: 2 sqrt(z) J'(2 sqrt z) + (2 - 2 alpha - nu) J(2 sqrt z) = 0
double bessel_starlike_root(Norm norm, double nu, double alpha);

struct CorollaryCheck {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct CorollaryReport {
    double nu = 0.0;
    std::vector<CorollaryCheck> checks;
    bool passed() const;
};

// Runs every corollary check at one nu:
//   bounds_closed_form against the displayed corollary expressions,
//   the radius against each displayed bracket,
//   the Bessel starlikeness roots against the Wright-side radii (alpha = 0, 0.3, 0.7),
//   and the phi_nu / Phi_nu scaling identities on z = 0.1, ..., 1.0.
CorollaryReport verify_corollaries(double nu);

}  // namespace wradii
