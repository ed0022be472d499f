#pragma once

#include "wradii/types.hpp"

namespace wradii {

/// Result of a truncated power series.
///
/// |exact - value| <= truncation_bound accounts for the discarded tail only;
/// abs_sum = sum of |term| bounds the floating point rounding, roughly
/// a few ulp of abs_sum.
struct SeriesValue {
    double value = 0.0;
    double truncation_bound = 0.0;
    int terms_used = 0;
    double abs_sum = 0.0;
};

/// Term multiplier m(n) of a family's series.
enum class Multiplier { One, TwoNPlusBeta, TwoNPlusOne, NPlusOne, TwoNPlusOneSquared, NPlusOneSquared };

/// Every family except F is  scale * x^offset * K(x), with the kernel
///
///     K(x) = sum_n (-1)^n m(n) x^(step*n) / (n! Gamma(n rho + beta)),
///
/// scale = Gamma(beta) when gamma_scaled. The kernel carries all the zeros
/// on x > 0, which is what the zero finder and the radii solver work with.
struct SeriesForm {
    Multiplier multiplier = Multiplier::One;
    int step = 2;
    double offset = 0.0;
    bool gamma_scaled = false;
};

/// Throws DomainError for Family::F, which is not a power series.
SeriesForm series_form(Family family, const WrightParams& p);

double multiplier_value(Multiplier m, double n, double beta);

/// Wright function phi(rho, beta, z) = sum z^n / (n! Gamma(n rho + beta)), rho > -1.
SeriesValue phi(const WrightParams& p, double z);

/// Value of a family at x. Lambda admits rho > -1; everything else needs rho > 0.
/// H and OmegaCap need x >= 0; non-integer powers (Psi, PsiPrime, F) need x >= 0.
SeriesValue eval(Family family, const WrightParams& p, double x);

/// First or second derivative by term-wise differentiation.
SeriesValue eval_derivative(Family family, const WrightParams& p, double x, int order);

/// Kernel K(x) of a series form and its scaled derivative x K'(x).
SeriesValue eval_kernel(const SeriesForm& form, const WrightParams& p, double x);
SeriesValue eval_kernel_xderiv(const SeriesForm& form, const WrightParams& p, double x);

}  // namespace wradii
