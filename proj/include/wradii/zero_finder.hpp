#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wradii/extended.hpp"
#include "wradii/types.hpp"
#include "wradii/wright_eval.hpp"

namespace wradii {

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
};

struct ZeroOptions {
    /// Bisection stops once hi - lo <= rel_tol * hi.
    double rel_tol = 1e-12;
    int max_bisections = 200;
    /// How many times the scan ceiling may double before giving up.
    int max_ceiling_doublings = 40;
};

/// Positive zeros of a family in its own variable, each with a sign-change bracket.
struct ZeroSequence {
    Family family = Family::Lambda;
    WrightParams params;
    std::vector<double> zeros;
    std::vector<Bracket> brackets;
};

/// Reliable sign of a kernel K(x): a double sum when its rounding bound is small
/// enough, otherwise a multiple precision sum.
class KernelSign {
public:
    struct Sample {
        int sign = 0;
        double value = 0.0;
        bool extended = false;
    };

    KernelSign(const SeriesForm& form, const WrightParams& p);
    Sample at(double x);

private:
    SeriesForm form_;
    WrightParams params_;
    std::optional<ExtendedKernel> extended_;
};

/// Typical length scale of the zeros: (Gamma(rho+beta)/Gamma(beta))^(1/2) in the
/// z variable, its square for families whose series runs in powers of x.
double zero_scale(const SeriesForm& form, const WrightParams& p);

/// The n smallest positive zeros, by sign-change scanning and bisection.
/// F has no zeros of its own on its domain and is rejected.
ZeroSequence first_zeros(Family family, const WrightParams& p, int n, const ZeroOptions& opts = {});

/// Bisection on an already certified bracket [lo, hi] of kernel sign change.
Bracket refine_bracket(KernelSign& sign, Bracket b, int sign_lo, const ZeroOptions& opts);

struct InterlacingReport {
    bool interlaced = false;
    std::vector<double> psi_prime_zeros;
    std::vector<double> lambda_zeros;
    std::string detail;
};

/// Checks zeta'_1 < lambda_1 < zeta'_2 < lambda_2 < ... for the first n zeros of
/// Psi' and lambda, each gap at least rel_gap relative to the larger point.
InterlacingReport check_interlacing(const WrightParams& p, int n, double rel_gap = 1e-10,
                                    const ZeroOptions& opts = {});

}  // namespace wradii
