#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wradii/radii_solver.hpp"
#include "wradii/zero_finder.hpp"

namespace wradii {

struct CheckResult {
    std::string name;
    double measured = 0.0;
    double limit = 0.0;
    bool passed = false;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    std::size_t failures() const;
    void append(const SuiteReport& other);
};

struct VerifyOptions {
    std::vector<double> nus{0.0, 1.0, 2.0};
    std::vector<double> rhos{0.5, 1.0, 2.0};
    std::vector<double> betas{0.5, 1.0, 2.0, 5.0};
    std::uint64_t seed = 20240611;
    RadiusOptions radius;
    ZeroOptions zeros;
};

// lambda_{1,1+nu}(z) against z^-nu J_nu(2z), z = 0.1, ..., 3.0, relative 1e-12.
SuiteReport suite_reduction(const VerifyOptions& o);
// Every check of verify_corollaries for each nu in o.nus.
SuiteReport suite_corollaries(const VerifyOptions& o);
// alpha = 0 radius strictly inside (lower_k2, upper_k2) plus ladder ordering, all theorems.
SuiteReport suite_bracketing(const VerifyOptions& o);
// First five zeros of Psi' and lambda interlace with gaps above 1e-10.
SuiteReport suite_interlacing(const VerifyOptions& o);
// Radii at alpha = 0 against the first zeros of psi, Omega, Theta, omega.
SuiteReport suite_alpha_consistency(const VerifyOptions& o);
// bounds_closed_form against bounds_from_sums on 100 random draws in (0.25, 4]^2.
SuiteReport suite_equivalence(const VerifyOptions& o);
// Radii strictly decrease over alpha = 0, 0.1, ..., 0.9 at (1, 1) and (0.5, 2).
SuiteReport suite_monotonicity(const VerifyOptions& o);
// 50-term partial sums of gamma_n^-2 and sigma_n^-1 inside (0.9 s1, s1).
// Uses the rho x beta grid restricted to beta <= 2.
SuiteReport suite_partial_sums(const VerifyOptions& o);
// |z|/(theta - |z|) >= Re(z/(theta - z)) on 1000 random pairs with theta > |z|.
SuiteReport suite_eqszasz(const VerifyOptions& o);
// eval_derivative against central differences with step 1e-5, relative 1e-7.
SuiteReport suite_derivatives(const VerifyOptions& o);
// Delta positivity and linearity, the log-gamma recurrence.
SuiteReport suite_gamma(const VerifyOptions& o);

// Named suites for the command line: reduction, corollaries, interlacing,
// bracketing, equivalence, properties, all.
SuiteReport run_suite(std::string_view name, const VerifyOptions& o);
std::vector<std::string> suite_names();

}  // namespace wradii
