#include "wradii/extended.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "wradii/errors.hpp"

namespace wradii {

namespace {

constexpr mpfr_prec_t kMinPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = 1 << 15;
constexpr int kMaxTerms = 200000;

// RAII owner of one mpfr_t.
class MpReal {
public:
    explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
    MpReal(const MpReal& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MpReal(MpReal&& o) noexcept {
        mpfr_init2(v_, MPFR_PREC_MIN);
        mpfr_swap(v_, o.v_);
    }
    MpReal& operator=(const MpReal& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MpReal& operator=(MpReal&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MpReal() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }

private:
    mpfr_t v_;
};

long exponent_of(const MpReal& v) {
    if (mpfr_zero_p(v.get())) return std::numeric_limits<long>::min() / 2;
    return mpfr_get_exp(v.get());
}

mpfr_prec_t round_up_precision(double bits) {
    const double clamped = std::clamp(bits, static_cast<double>(kMinPrecision), static_cast<double>(kMaxPrecision));
    const auto b = static_cast<mpfr_prec_t>(std::ceil(clamped / 128.0) * 128.0);
    return std::min(b, kMaxPrecision);
}

}  // namespace

struct ExtendedKernel::Impl {
    SeriesForm form;
    WrightParams params;
    mpfr_prec_t precision = 0;
    std::vector<MpReal> coefficients;  // (-1)^n m(n) / (n! Gamma(n rho + beta))
    MpReal factorial{kMinPrecision};   // n! for n = coefficients.size() - 1

    void reset(mpfr_prec_t prec) {
        precision = prec;
        coefficients.clear();
        factorial = MpReal(prec);
        mpfr_set_ui(factorial.get(), 1, MPFR_RNDN);
    }

    const MpReal& coefficient(std::size_t n) {
        while (coefficients.size() <= n) {
            const auto k = static_cast<unsigned long>(coefficients.size());
            if (k > 0) mpfr_mul_ui(factorial.get(), factorial.get(), k, MPFR_RNDN);
            MpReal arg(precision);
            mpfr_set_d(arg.get(), params.rho, MPFR_RNDN);
            mpfr_mul_ui(arg.get(), arg.get(), k, MPFR_RNDN);
            mpfr_add_d(arg.get(), arg.get(), params.beta, MPFR_RNDN);
            MpReal c(precision);
            mpfr_gamma(c.get(), arg.get(), MPFR_RNDN);
            mpfr_mul(c.get(), c.get(), factorial.get(), MPFR_RNDN);

            MpReal m(precision);
            switch (form.multiplier) {
                case Multiplier::One: mpfr_set_ui(m.get(), 1, MPFR_RNDN); break;
                case Multiplier::TwoNPlusBeta:
                    mpfr_set_d(m.get(), params.beta, MPFR_RNDN);
                    mpfr_add_ui(m.get(), m.get(), 2 * k, MPFR_RNDN);
                    break;
                case Multiplier::TwoNPlusOne: mpfr_set_ui(m.get(), 2 * k + 1, MPFR_RNDN); break;
                case Multiplier::NPlusOne: mpfr_set_ui(m.get(), k + 1, MPFR_RNDN); break;
                case Multiplier::TwoNPlusOneSquared:
                    mpfr_set_ui(m.get(), (2 * k + 1) * (2 * k + 1), MPFR_RNDN);
                    break;
                case Multiplier::NPlusOneSquared: mpfr_set_ui(m.get(), (k + 1) * (k + 1), MPFR_RNDN); break;
            }
            mpfr_div(c.get(), m.get(), c.get(), MPFR_RNDN);
            if (k % 2 == 1) mpfr_neg(c.get(), c.get(), MPFR_RNDN);
            coefficients.push_back(std::move(c));
        }
        return coefficients[n];
    }
};

ExtendedKernel::ExtendedKernel(const SeriesForm& form, const WrightParams& p) : impl_(std::make_unique<Impl>()) {
    require_zero_domain(p);
    impl_->form = form;
    impl_->params = p;
}

ExtendedKernel::~ExtendedKernel() = default;
ExtendedKernel::ExtendedKernel(ExtendedKernel&&) noexcept = default;
ExtendedKernel& ExtendedKernel::operator=(ExtendedKernel&&) noexcept = default;

ExtendedKernel::Result ExtendedKernel::evaluate(double x, double abs_sum_hint) { return run(x, abs_sum_hint, false); }

ExtendedKernel::Result ExtendedKernel::evaluate_xderiv(double x, double abs_sum_hint) {
    return run(x, abs_sum_hint, true);
}

ExtendedKernel::Result ExtendedKernel::run(double x, double abs_sum_hint, bool xderiv) {
    if (!std::isfinite(x)) throw DomainError("ExtendedKernel: non-finite argument");
    Impl& im = *impl_;

    // Cancellation can cost up to log2(abs_sum) bits above the value and as
    // many again below 1, hence the factor two.
    double hint_bits = 4096.0;
    if (std::isfinite(abs_sum_hint)) hint_bits = 2.0 * std::log2(std::max(abs_sum_hint, 1.0)) + 128.0;
    mpfr_prec_t prec = round_up_precision(hint_bits);
    if (im.precision >= prec)
        prec = im.precision;
    else
        im.reset(prec);

    while (true) {
        MpReal y(prec), power(prec), term(prec), sum(prec), abs_sum(prec), abs_term(prec);
        mpfr_set_d(y.get(), x, MPFR_RNDN);
        if (im.form.step == 2) mpfr_sqr(y.get(), y.get(), MPFR_RNDN);
        mpfr_set_ui(power.get(), 1, MPFR_RNDN);
        mpfr_set_ui(sum.get(), 0, MPFR_RNDN);
        mpfr_set_ui(abs_sum.get(), 0, MPFR_RNDN);

        long prev_exp = std::numeric_limits<long>::max();
        int small_run = 0;
        int n = 0;
        for (; n < kMaxTerms; ++n) {
            mpfr_mul(term.get(), im.coefficient(static_cast<std::size_t>(n)).get(), power.get(), MPFR_RNDN);
            if (xderiv) mpfr_mul_ui(term.get(), term.get(), static_cast<unsigned long>(im.form.step * n), MPFR_RNDN);
            mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
            mpfr_abs(abs_term.get(), term.get(), MPFR_RNDN);
            mpfr_add(abs_sum.get(), abs_sum.get(), abs_term.get(), MPFR_RNDN);
            mpfr_mul(power.get(), power.get(), y.get(), MPFR_RNDN);

            const long te = exponent_of(term);
            const long scale = std::max(exponent_of(sum), exponent_of(abs_sum) - 2 * static_cast<long>(prec));
            const bool small = te < scale - static_cast<long>(prec) - 8;
            const bool shrinking = te < prev_exp - 1;  // ratio below 1/2
            prev_exp = te;
            small_run = (small && shrinking) ? small_run + 1 : 0;
            if (small_run >= 3) break;
        }
        if (n >= kMaxTerms) throw ConvergenceError("ExtendedKernel: series did not converge");

        // Rounding bound: about (terms + table error) ulps of abs_sum.
        const long err_exp = exponent_of(abs_sum) - static_cast<long>(prec) + 2 +
                             static_cast<long>(std::ceil(std::log2(static_cast<double>(n + 2))));
        if (!mpfr_zero_p(sum.get()) && exponent_of(sum) > err_exp + 8) {
            Result r;
            r.sign = mpfr_sgn(sum.get()) > 0 ? 1 : -1;
            r.value = mpfr_get_d(sum.get(), MPFR_RNDN);
            r.precision_bits = static_cast<long>(prec);
            r.terms_used = n + 1;
            return r;
        }
        if (prec >= kMaxPrecision)
            throw ConvergenceError("ExtendedKernel: sign undetermined at " + std::to_string(x) +
                                   " even at maximum precision (double zero?)");
        prec = std::min(prec * 2, kMaxPrecision);
        im.reset(prec);
    }
}

}  // namespace wradii
