#pragma once

#include <memory>

#include "wradii/types.hpp"
#include "wradii/wright_eval.hpp"

namespace wradii {

/// Multiple precision evaluation of a series kernel K(x) (see SeriesForm).
///
/// Far out on the real axis the alternating kernels cancel by dozens of
/// orders of magnitude and a double sum no longer has a trustworthy sign.
/// This evaluator sums the same series in MPFR, raising the working precision
/// until the rounding error bound is well below |K(x)|. Coefficients are cached,
/// so one instance should serve a whole zero hunt. Not thread safe; use one
/// instance per thread.
class ExtendedKernel {
public:
    struct Result {
        int sign = 0;
        double value = 0.0;
        long precision_bits = 0;
        int terms_used = 0;
    };

    ExtendedKernel(const SeriesForm& form, const WrightParams& p);
    ~ExtendedKernel();
    ExtendedKernel(ExtendedKernel&&) noexcept;
    ExtendedKernel& operator=(ExtendedKernel&&) noexcept;
    ExtendedKernel(const ExtendedKernel&) = delete;
    ExtendedKernel& operator=(const ExtendedKernel&) = delete;

    /// abs_sum_hint is the double estimate of sum |term| (used to pick the
    /// starting precision); pass 0 if unknown.
    Result evaluate(double x, double abs_sum_hint = 0.0);

    /// The scaled derivative x K'(x), summed the same way.
    Result evaluate_xderiv(double x, double abs_sum_hint = 0.0);

private:
    Result run(double x, double abs_sum_hint, bool xderiv);

    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace wradii
