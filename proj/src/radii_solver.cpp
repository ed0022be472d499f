#include "wradii/radii_solver.hpp"

#include <cfloat>
#include <cmath>
#include <sstream>
#include <string>

#include "wradii/errors.hpp"
#include "wradii/extended.hpp"
#include "wradii/wright_eval.hpp"

namespace wradii {

namespace {

constexpr double kEdge = 1e-8;

void validate(const RadiusQuery& q) {
    require_zero_domain(q.params);
    if (!(q.alpha >= 0.0 && q.alpha < 1.0))
        throw DomainError("alpha must lie in [0, 1), got " + std::to_string(q.alpha));
}

// x K'(x) / K(x) for the kernel of a family. Close to a zero of K the double
// sum can lose its sign to rounding; the ratio is then redone in MPFR.
double log_slope(Family family, const WrightParams& p, double x) {
    const SeriesForm form = series_form(family, p);
    const SeriesValue k = eval_kernel(form, p, x);
    const SeriesValue dk = eval_kernel_xderiv(form, p, x);
    const double noise = 64.0 * DBL_EPSILON * k.abs_sum + k.truncation_bound;
    if (std::fabs(k.value) > noise) return dk.value / k.value;
    ExtendedKernel mp(form, p);
    const double num = mp.evaluate_xderiv(x, dk.abs_sum).value;
    return num / mp.evaluate(x, k.abs_sum).value;
}

// Family whose first zero bounds the search interval, in the solver's variable.
Family domain_family(const RadiusQuery& q) {
    if (q.kind == RadiusKind::Starlike) return Family::Lambda;
    switch (q.norm) {
        case Norm::F: return Family::PsiPrime;
        case Norm::G: return Family::SmallPsi;  // g' = Gamma(beta) psi
        case Norm::H: return Family::OmegaCap;  // h' = Gamma(beta) Omega
    }
    return Family::Lambda;
}

bool solved_in_sqrt(const RadiusQuery& q) { return q.kind == RadiusKind::Starlike && q.norm == Norm::H; }

double domain_zero(const RadiusQuery& q, const RadiusOptions& opts) {
    ZeroOptions zopts;
    zopts.rel_tol = std::min(opts.rel_tol, 1e-12);
    const double zero = first_zeros(domain_family(q), q.params, 1, zopts).zeros.front();
    if (q.kind == RadiusKind::Convex && q.norm == Norm::F) {
        const double lambda1 = first_zeros(Family::Lambda, q.params, 1, zopts).zeros.front();
        if (!(zero < lambda1)) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "interlacing zeta'_1 < lambda_1 fails: " << zero << " vs " << lambda1;
            throw InvariantError(msg.str());
        }
    }
    return zero;
}

RadiusResult solve(const RadiusQuery& q, double zero, const RadiusOptions& opts) {
    validate(q);
    const bool in_sqrt = solved_in_sqrt(q);
    const double tol = in_sqrt ? 0.5 * opts.rel_tol : opts.rel_tol;

    double lo = kEdge * zero;
    double hi = (1.0 - kEdge) * zero;
    const double f_lo = radius_target(q, lo);
    const double f_hi = radius_target(q, hi);
    if (!(f_lo > 0.0) || !(f_hi < 0.0)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "radius bracket not certified: target(" << lo << ") = " << f_lo << ", target(" << hi
            << ") = " << f_hi;
        throw ConvergenceError(msg.str());
    }

    int it = 0;
    while (hi - lo > tol * hi) {
        if (++it > opts.max_bisections) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "radius bisection cap reached with bracket [" << lo << ", " << hi << "]";
            throw ConvergenceError(msg.str());
        }
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (radius_target(q, mid) > 0.0)
            lo = mid;
        else
            hi = mid;
    }

    const double t = 0.5 * (lo + hi);
    RadiusResult r;
    r.residual = std::fabs(radius_target(q, t));
    r.iterations = it;
    if (in_sqrt) {
        r.value = t * t;
        r.bracket = {lo * lo, hi * hi};
        r.upper_domain_zero = zero * zero;
    } else {
        r.value = t;
        r.bracket = {lo, hi};
        r.upper_domain_zero = zero;
    }
    return r;
}

}  // namespace

double radius_target(const RadiusQuery& q, double t) {
    validate(q);
    const WrightParams& p = q.params;
    const double beta = p.beta;
    const double a = q.alpha;
    if (q.kind == RadiusKind::Starlike) {
        const double s = log_slope(Family::Lambda, p, t);  // t lambda'(t) / lambda(t)
        switch (q.norm) {
            case Norm::F: return 1.0 + s / beta - a;
            case Norm::G: return 1.0 + s - a;
            case Norm::H: return 1.0 + 0.5 * s - a;
        }
    }
    switch (q.norm) {
        case Norm::F:
            // 1 + r Psi''/Psi' + (1/beta - 1) r Psi'/Psi with the powers of r stripped off
            return 1.0 + log_slope(Family::PsiPrime, p, t) + (1.0 / beta - 1.0) * log_slope(Family::Lambda, p, t) - a;
        case Norm::G: return 1.0 + log_slope(Family::SmallPsi, p, t) - a;
        case Norm::H: return 1.0 + log_slope(Family::OmegaCap, p, t) - a;
    }
    return 0.0;
}

RadiusResult radius_starlike(const RadiusQuery& q, const RadiusOptions& opts) {
    if (q.kind != RadiusKind::Starlike) throw DomainError("radius_starlike: query kind must be starlike");
    validate(q);
    return solve(q, domain_zero(q, opts), opts);
}

RadiusResult radius_convex(const RadiusQuery& q, const RadiusOptions& opts) {
    if (q.kind != RadiusKind::Convex) throw DomainError("radius_convex: query kind must be convex");
    validate(q);
    return solve(q, domain_zero(q, opts), opts);
}

RadiusResult radius(const RadiusQuery& q, const RadiusOptions& opts) {
    return q.kind == RadiusKind::Starlike ? radius_starlike(q, opts) : radius_convex(q, opts);
}

std::vector<RadiusResult> alpha_profile(RadiusKind kind, Norm norm, const WrightParams& p,
                                        std::span<const double> alphas, const RadiusOptions& opts) {
    std::vector<RadiusResult> out;
    if (alphas.empty()) return out;
    RadiusQuery q{kind, norm, p, alphas.front()};
    for (double a : alphas) {
        q.alpha = a;
        validate(q);
    }
    const double zero = domain_zero(q, opts);
    out.reserve(alphas.size());
    for (double a : alphas) {
        q.alpha = a;
        out.push_back(solve(q, zero, opts));
    }
    return out;
}

}  // namespace wradii
