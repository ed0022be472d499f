#include "wradii/wright_eval.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "wradii/errors.hpp"
#include "wradii/gamma_kernel.hpp"

namespace wradii {

namespace {

constexpr int kMaxTerms = 100000;
constexpr double kRelativeStop = 1e-17;
constexpr double kRatioStop = 0.5;
constexpr int kSmallRun = 3;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double t) {
        const double s = sum_ + t;
        if (std::fabs(sum_) >= std::fabs(t))
            comp_ += (sum_ - s) + t;
        else
            comp_ += (t - s) + sum_;
        sum_ = s;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

double falling_factorial(double a, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) r *= a - i;
    return r;
}

bool is_integer(double v) { return v == std::floor(v); }

// Signed term  scale * (-1)^n m(n) extra(n) ff(e + order, order) x^e / (n! Gamma(n rho + beta))
// with e = step n + offset - order.
struct TermGenerator {
    SeriesForm form;
    WrightParams p;
    double x;
    int order = 0;
    bool times_step_n = false;  // kernel x K'(x) mode

    double exponent(int n) const { return form.step * static_cast<double>(n) + form.offset - order; }

    double coefficient(int n) const {
        double c = multiplier_value(form.multiplier, n, p.beta);
        if (times_step_n) c *= form.step * static_cast<double>(n);
        c *= falling_factorial(form.step * static_cast<double>(n) + form.offset, order);
        return (n % 2 == 0) ? c : -c;
    }

    double operator()(int n) const {
        const double c = coefficient(n);
        if (c == 0.0) return 0.0;
        const double arg = n * p.rho + p.beta;
        if (arg <= 0.0 && is_integer(arg)) return 0.0;  // 1/Gamma vanishes at the poles
        const double e = exponent(n);
        const double ax = std::fabs(x);
        int sign = c > 0 ? 1 : -1;
        if (x < 0.0) {
            if (!is_integer(e)) throw DomainError("non-integer power of a negative argument");
            if (std::fmod(std::fabs(e), 2.0) == 1.0) sign = -sign;
        }

        // Direct evaluation keeps every factor within an ulp or two; fall back
        // to logarithms only when some factor leaves the double range.
        if (n < 170 && arg < 170.0 && (!form.gamma_scaled || p.beta < 170.0)) {
            const double pw = std::pow(ax, e);
            const double rg = reciprocal_gamma(arg);
            double mag = std::fabs(c) * pw / std::tgamma(n + 1.0) * std::fabs(rg);
            if (form.gamma_scaled) mag *= std::tgamma(p.beta);
            if (std::isfinite(mag) && mag >= DBL_MIN) return (rg < 0 ? -sign : sign) * mag;
        }
        const SignedLog g = signed_log_gamma(arg);
        double log_mag = std::log(std::fabs(c)) + e * std::log(ax) - std::lgamma(n + 1.0) - g.log_abs;
        if (form.gamma_scaled) log_mag += log_gamma(p.beta);
        return (g.sign < 0 ? -sign : sign) * std::exp(log_mag);
    }
};

SeriesValue sum_at_origin(const TermGenerator& gen) {
    SeriesValue out;
    out.terms_used = 1;
    for (int n = 0; gen.exponent(n) <= 0.0; ++n) {
        const double c = gen.coefficient(n);
        const double e = gen.exponent(n);
        if (c == 0.0) continue;
        if (e < 0.0) throw DomainError("negative power at x = 0; evaluate the limit instead");
        // e == 0: x^0 = 1
        TermGenerator one = gen;
        one.x = 1.0;
        out.value = one(n);
        out.abs_sum = std::fabs(out.value);
        out.terms_used = n + 1;
    }
    return out;
}

SeriesValue sum_series(const TermGenerator& gen) {
    if (gen.x == 0.0) return sum_at_origin(gen);

    CompensatedSum sum;
    double abs_sum = 0.0;
    double max_abs = 0.0;
    double prev = 0.0;
    int small_run = 0;
    for (int n = 0; n < kMaxTerms; ++n) {
        const double t = gen(n);
        if (t == 0.0) continue;
        sum.add(t);
        const double at = std::fabs(t);
        abs_sum += at;
        max_abs = std::max(max_abs, at);
        const double ratio = prev > 0.0 ? at / prev : INFINITY;
        prev = at;
        const double scale = std::max(std::fabs(sum.value()), 1e-20 * max_abs);
        if (at < kRelativeStop * scale && ratio < kRatioStop)
            ++small_run;
        else
            small_run = 0;
        if (small_run >= kSmallRun) {
            SeriesValue out;
            out.value = sum.value();
            out.truncation_bound = at * ratio / (1.0 - ratio);
            out.terms_used = n + 1;
            out.abs_sum = abs_sum;
            return out;
        }
    }
    throw ConvergenceError("series did not converge within " + std::to_string(kMaxTerms) + " terms");
}

bool needs_nonnegative_x(Family family, const SeriesForm& form) {
    return family == Family::H || family == Family::OmegaCap || !is_integer(form.offset);
}

void check_family_domain(Family family, const WrightParams& p, double x) {
    if (!std::isfinite(x)) throw DomainError("evaluation point must be finite");
    if (family == Family::Lambda)
        require_series_domain(p);
    else
        require_zero_domain(p);
}

// f = x (Gamma(beta) lambda(x))^(1/beta) and its first two derivatives, on [0, lambda_1).
SeriesValue eval_f(const WrightParams& p, double x, int order) {
    if (x < 0.0) throw DomainError("family f is evaluated on x >= 0 only");
    const SeriesValue l0 = eval(Family::Lambda, p, x);
    if (!(l0.value > 0.0))
        throw DomainError("family f is only defined before the first zero of lambda");
    const double beta = p.beta;
    const double u = std::exp((log_gamma(beta) + std::log(l0.value)) / beta);

    SeriesValue out;
    out.terms_used = l0.terms_used;
    if (order == 0) {
        out.value = x * u;
        out.truncation_bound = std::fabs(out.value) * l0.truncation_bound / (beta * l0.value);
        out.abs_sum = std::fabs(out.value) * l0.abs_sum / l0.value;
        return out;
    }
    const SeriesValue l1 = eval_derivative(Family::Lambda, p, x, 1);
    const double d1 = l1.value / l0.value;  // lambda'/lambda
    const double rel = (l0.truncation_bound + x * l1.truncation_bound) / l0.value;
    if (order == 1) {
        out.value = u * (1.0 + x * d1 / beta);
        out.truncation_bound = (std::fabs(out.value) + u) * rel;
        out.abs_sum = u * (1.0 + x * l1.abs_sum / (beta * l0.value)) * l0.abs_sum / l0.value;
        return out;
    }
    const SeriesValue l2 = eval_derivative(Family::Lambda, p, x, 2);
    const double d2 = l2.value / l0.value;  // lambda''/lambda
    const double q = d1 / beta;
    out.value = u * (2.0 * q + x * (q * q + (d2 - d1 * d1) / beta));
    out.truncation_bound = (std::fabs(out.value) + u) * (rel + x * l2.truncation_bound / l0.value);
    out.abs_sum = u * (l0.abs_sum + l1.abs_sum + x * l2.abs_sum) / l0.value;
    return out;
}

}  // namespace

double multiplier_value(Multiplier m, double n, double beta) {
    switch (m) {
        case Multiplier::One: return 1.0;
        case Multiplier::TwoNPlusBeta: return 2.0 * n + beta;
        case Multiplier::TwoNPlusOne: return 2.0 * n + 1.0;
        case Multiplier::NPlusOne: return n + 1.0;
        case Multiplier::TwoNPlusOneSquared: return (2.0 * n + 1.0) * (2.0 * n + 1.0);
        case Multiplier::NPlusOneSquared: return (n + 1.0) * (n + 1.0);
    }
    return 0.0;
}

SeriesForm series_form(Family family, const WrightParams& p) {
    switch (family) {
        case Family::Lambda: return {Multiplier::One, 2, 0.0, false};
        case Family::Psi: return {Multiplier::One, 2, p.beta, false};
        case Family::PsiPrime: return {Multiplier::TwoNPlusBeta, 2, p.beta - 1.0, false};
        case Family::SmallPsi: return {Multiplier::TwoNPlusOne, 2, 0.0, false};
        case Family::OmegaCap: return {Multiplier::NPlusOne, 1, 0.0, false};
        case Family::Theta: return {Multiplier::TwoNPlusOneSquared, 2, 0.0, true};
        case Family::OmegaLow: return {Multiplier::NPlusOneSquared, 1, 0.0, true};
        case Family::G: return {Multiplier::One, 2, 1.0, true};
        case Family::H: return {Multiplier::One, 1, 1.0, true};
        case Family::F: break;
    }
    throw DomainError("family f is not a power series");
}

SeriesValue phi(const WrightParams& p, double z) {
    require_series_domain(p);
    if (!std::isfinite(z)) throw DomainError("phi: z must be finite");
    // The kernel carries (-1)^n, so phi(z) is the step-1 kernel at -z.
    TermGenerator gen{{Multiplier::One, 1, 0.0, false}, p, -z};
    return sum_series(gen);
}

SeriesValue eval(Family family, const WrightParams& p, double x) {
    check_family_domain(family, p, x);
    if (family == Family::F) return eval_f(p, x, 0);
    const SeriesForm form = series_form(family, p);
    if (x < 0.0 && needs_nonnegative_x(family, form))
        throw DomainError(std::string("family ") + std::string(to_string(family)) + " needs x >= 0");
    return sum_series(TermGenerator{form, p, x});
}

SeriesValue eval_derivative(Family family, const WrightParams& p, double x, int order) {
    if (order != 1 && order != 2) throw DomainError("derivative order must be 1 or 2");
    check_family_domain(family, p, x);
    if (family == Family::F) return eval_f(p, x, order);
    const SeriesForm form = series_form(family, p);
    if (x < 0.0 && needs_nonnegative_x(family, form))
        throw DomainError(std::string("family ") + std::string(to_string(family)) + " needs x >= 0");
    return sum_series(TermGenerator{form, p, x, order});
}

SeriesValue eval_kernel(const SeriesForm& form, const WrightParams& p, double x) {
    if (!std::isfinite(x)) throw DomainError("evaluation point must be finite");
    const SeriesForm kernel{form.multiplier, form.step, 0.0, false};
    return sum_series(TermGenerator{kernel, p, x});
}

SeriesValue eval_kernel_xderiv(const SeriesForm& form, const WrightParams& p, double x) {
    if (!std::isfinite(x)) throw DomainError("evaluation point must be finite");
    const SeriesForm kernel{form.multiplier, form.step, 0.0, false};
    return sum_series(TermGenerator{kernel, p, x, 0, true});
}

}  // namespace wradii
