#include "wradii/zero_finder.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>
#include <string>

#include "wradii/errors.hpp"
#include "wradii/gamma_kernel.hpp"

namespace wradii {

namespace {

// Rounding in the double kernel sum stays within a few ulps of sum |term|;
// demand a wide margin before trusting the sign.
constexpr double kSignMargin = 64.0 * DBL_EPSILON;

}  // namespace

KernelSign::KernelSign(const SeriesForm& form, const WrightParams& p) : form_(form), params_(p) {
    require_zero_domain(p);
}

KernelSign::Sample KernelSign::at(double x) {
    double abs_hint = 0.0;
    try {
        const SeriesValue v = eval_kernel(form_, params_, x);
        const double noise = kSignMargin * v.abs_sum + v.truncation_bound;
        if (std::isfinite(v.value) && std::isfinite(v.abs_sum) && std::fabs(v.value) > noise)
            return {v.value > 0 ? 1 : -1, v.value, false};
        abs_hint = v.abs_sum;
    } catch (const ConvergenceError&) {
        abs_hint = INFINITY;
    }
    if (!extended_) extended_.emplace(form_, params_);
    const auto r = extended_->evaluate(x, abs_hint);
    return {r.sign, r.value, true};
}

double zero_scale(const SeriesForm& form, const WrightParams& p) {
    const double ratio = std::exp(log_gamma(p.rho + p.beta) - log_gamma(p.beta));
    return form.step == 2 ? std::sqrt(ratio) : ratio;
}

Bracket refine_bracket(KernelSign& sign, Bracket b, int sign_lo, const ZeroOptions& opts) {
    for (int it = 0; it < opts.max_bisections; ++it) {
        if (b.hi - b.lo <= opts.rel_tol * b.hi) return b;
        const double mid = 0.5 * (b.lo + b.hi);
        if (mid <= b.lo || mid >= b.hi) return b;  // no representable midpoint left
        if (sign.at(mid).sign == sign_lo)
            b.lo = mid;
        else
            b.hi = mid;
    }
    if (b.hi - b.lo <= opts.rel_tol * b.hi) return b;
    throw ConvergenceError("bisection hit its iteration cap");
}

ZeroSequence first_zeros(Family family, const WrightParams& p, int n, const ZeroOptions& opts) {
    require_zero_domain(p);
    if (n < 1) throw DomainError("first_zeros: n must be >= 1");
    if (family == Family::F) throw DomainError("first_zeros: family f has no zeros on its domain");

    const SeriesForm form = series_form(family, p);
    KernelSign sign(form, p);
    ZeroSequence out{family, p, {}, {}};

    const double scale = zero_scale(form, p);
    double step = 0.1 * scale;
    double ceiling = 16.0 * scale * n;
    int doublings = 0;

    double t_prev = 0.0;
    int s_prev = sign.at(0.0).sign;
    while (static_cast<int>(out.zeros.size()) < n) {
        const double t = t_prev + step;
        if (t > ceiling) {
            if (++doublings > opts.max_ceiling_doublings) {
                std::ostringstream msg;
                msg << "found only " << out.zeros.size() << " of " << n << " zeros of " << to_string(family)
                    << " below " << ceiling;
                throw ScanExhaustedError(msg.str());
            }
            ceiling *= 2.0;
        }
        const int s = sign.at(t).sign;
        if (s != s_prev) {
            const Bracket b = refine_bracket(sign, {t_prev, t}, s_prev, opts);
            out.brackets.push_back(b);
            out.zeros.push_back(0.5 * (b.lo + b.hi));
            const std::size_t k = out.zeros.size();
            // Zero gaps change slowly, so a tenth of the last gap cannot skip a pair.
            if (k >= 2) step = 0.1 * (out.zeros[k - 1] - out.zeros[k - 2]);
        }
        t_prev = t;
        s_prev = s;
    }
    return out;
}

InterlacingReport check_interlacing(const WrightParams& p, int n, double rel_gap, const ZeroOptions& opts) {
    InterlacingReport report;
    report.psi_prime_zeros = first_zeros(Family::PsiPrime, p, n, opts).zeros;
    report.lambda_zeros = first_zeros(Family::Lambda, p, n, opts).zeros;

    std::vector<double> chain;
    for (int k = 0; k < n; ++k) {
        chain.push_back(report.psi_prime_zeros[k]);
        chain.push_back(report.lambda_zeros[k]);
    }
    report.interlaced = true;
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (chain[i] - chain[i - 1] <= rel_gap * chain[i]) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "chain breaks at position " << i << ": " << chain[i - 1] << " !< " << chain[i];
            report.detail = msg.str();
            report.interlaced = false;
            break;
        }
    }
    return report;
}

}  // namespace wradii
