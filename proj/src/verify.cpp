#include "wradii/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "wradii/bessel_crosscheck.hpp"
#include "wradii/errors.hpp"
#include "wradii/euler_rayleigh.hpp"
#include "wradii/gamma_kernel.hpp"
#include "wradii/wright_eval.hpp"

namespace wradii {

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

void SuiteReport::append(const SuiteReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

namespace {

constexpr Theorem kTheorems[] = {Theorem::T2, Theorem::T3, Theorem::T4, Theorem::T6, Theorem::T7};

std::string label(const char* what, const WrightParams& p) {
    std::ostringstream s;
    s << what << " (rho=" << p.rho << ", beta=" << p.beta << ")";
    return s.str();
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(a), std::abs(b)); }

void expect_at_most(SuiteReport& r, std::string name, double measured, double limit) {
    r.checks.push_back({std::move(name), measured, limit, measured <= limit});
}

// Wraps a check body so that a thrown error becomes a failed entry instead of
// aborting the suite.
template <class Body>
void guarded(SuiteReport& r, const std::string& name, Body body) {
    try {
        body();
    } catch (const std::exception& e) {
        r.checks.push_back({name + ": " + e.what(), NAN, 0.0, false});
    }
}

}  // namespace

SuiteReport suite_reduction(const VerifyOptions& o) {
    SuiteReport r{"reduction", o.seed, {}};
    for (double nu : {0.0, 0.5, 1.0, 2.0}) {
        for (int i = 1; i <= 30; ++i) {
            const double z = 0.1 * i;
            std::ostringstream name;
            name << "lambda vs Bessel nu=" << nu << " z=" << z;
            guarded(r, name.str(), [&] { expect_at_most(r, name.str(), verify_reduction(nu, z).relative, 1e-12); });
        }
    }
    return r;
}

SuiteReport suite_corollaries(const VerifyOptions& o) {
    SuiteReport r{"corollaries", o.seed, {}};
    for (double nu : o.nus) {
        guarded(r, "corollaries", [&] {
            for (const CorollaryCheck& c : verify_corollaries(nu).checks) {
                r.checks.push_back({c.name, c.error, c.tolerance, c.passed});
            }
        });
    }
    return r;
}

SuiteReport suite_bracketing(const VerifyOptions& o) {
    SuiteReport r{"bracketing", o.seed, {}};
    for (double rho : o.rhos) {
        for (double beta : o.betas) {
            const WrightParams p{rho, beta};
            for (Theorem t : kTheorems) {
                const std::string base = std::string(to_string(t)) + " ";
                guarded(r, label((base + "bracket").c_str(), p), [&] {
                    const BoundsReport b = bounds_closed_form(t, p);
                    const double x = radius(RadiusQuery{radius_kind(t), radius_norm(t), p, 0.0}, o.radius).value;
                    const bool ladder = b.lower_k1 <= b.lower_k2 && b.lower_k2 < b.upper_k2 && b.upper_k2 <= b.upper_k1;
                    r.checks.push_back({label((base + "ladder").c_str(), p), b.upper_k2 - b.lower_k2, 0.0, ladder});
                    const double outside = std::max(b.lower_k2 - x, x - b.upper_k2);
                    r.checks.push_back({label((base + "radius inside k=2 bracket").c_str(), p), outside, 0.0,
                                        b.lower_k2 < x && x < b.upper_k2});
                });
            }
        }
    }
    return r;
}

SuiteReport suite_interlacing(const VerifyOptions& o) {
    SuiteReport r{"interlacing", o.seed, {}};
    for (double rho : o.rhos) {
        for (double beta : o.betas) {
            const WrightParams p{rho, beta};
            guarded(r, label("interlacing", p), [&] {
                const InterlacingReport rep = check_interlacing(p, 5, 1e-10, o.zeros);
                // measured: smallest relative gap along the merged chain
                double gap = INFINITY;
                for (std::size_t i = 0; i < rep.lambda_zeros.size(); ++i) {
                    gap = std::min(gap, rel_diff(rep.psi_prime_zeros[i], rep.lambda_zeros[i]));
                    if (i + 1 < rep.psi_prime_zeros.size())
                        gap = std::min(gap, rel_diff(rep.lambda_zeros[i], rep.psi_prime_zeros[i + 1]));
                }
                r.checks.push_back({label("interlacing of 5 zeros", p), gap, 1e-10, rep.interlaced});
            });
        }
    }
    return r;
}

SuiteReport suite_alpha_consistency(const VerifyOptions& o) {
    SuiteReport r{"alpha-consistency", o.seed, {}};
    struct Case {
        RadiusKind kind;
        Norm norm;
        Family family;
        const char* name;
    };
    const Case cases[] = {
        {RadiusKind::Starlike, Norm::G, Family::SmallPsi, "starlike g = first zero of psi"},
        {RadiusKind::Starlike, Norm::H, Family::OmegaCap, "starlike h = first zero of Omega"},
        {RadiusKind::Convex, Norm::G, Family::Theta, "convex g = first zero of Theta"},
        {RadiusKind::Convex, Norm::H, Family::OmegaLow, "convex h = first zero of omega"},
    };
    for (double rho : o.rhos) {
        for (double beta : o.betas) {
            const WrightParams p{rho, beta};
            for (const Case& c : cases) {
                guarded(r, label(c.name, p), [&] {
                    const double x = radius(RadiusQuery{c.kind, c.norm, p, 0.0}, o.radius).value;
                    const double z = first_zeros(c.family, p, 1, o.zeros).zeros.front();
                    expect_at_most(r, label(c.name, p), rel_diff(x, z), 1e-10);
                });
            }
        }
    }
    return r;
}

SuiteReport suite_equivalence(const VerifyOptions& o) {
    SuiteReport r{"equivalence", o.seed, {}};
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> u(0.25, 4.0);
    for (int draw = 0; draw < 100; ++draw) {
        const WrightParams p{u(rng), u(rng)};
        for (Theorem t : kTheorems) {
            const std::string name = label((std::string(to_string(t)) + " closed form = power sums").c_str(), p);
            guarded(r, name, [&] {
                const BoundsReport a = bounds_closed_form(t, p);
                const BoundsReport b = bounds_from_sums(rayleigh_sums(t, p), t);
                const double worst = std::max({rel_diff(a.lower_k1, b.lower_k1), rel_diff(a.lower_k2, b.lower_k2),
                                               rel_diff(a.upper_k2, b.upper_k2), rel_diff(a.upper_k1, b.upper_k1)});
                expect_at_most(r, name, worst, 1e-11);
            });
        }
    }
    return r;
}

SuiteReport suite_monotonicity(const VerifyOptions& o) {
    SuiteReport r{"monotonicity", o.seed, {}};
    std::vector<double> alphas;
    for (int i = 0; i < 10; ++i) alphas.push_back(0.1 * i);
    for (const WrightParams p : {WrightParams{1.0, 1.0}, WrightParams{0.5, 2.0}}) {
        for (RadiusKind kind : {RadiusKind::Starlike, RadiusKind::Convex}) {
            for (Norm norm : {Norm::F, Norm::G, Norm::H}) {
                const std::string name =
                    label((std::string(to_string(kind)) + " " + std::string(to_string(norm)) + " decreasing in alpha").c_str(), p);
                guarded(r, name, [&] {
                    const auto radii = alpha_profile(kind, norm, p, alphas, o.radius);
                    // measured: largest ratio r(alpha_{i+1}) / r(alpha_i), must stay below 1
                    double worst = 0.0;
                    for (std::size_t i = 0; i + 1 < radii.size(); ++i)
                        worst = std::max(worst, radii[i + 1].value / radii[i].value);
                    r.checks.push_back({name, worst, 1.0, worst < 1.0});
                });
            }
        }
    }
    return r;
}

SuiteReport suite_partial_sums(const VerifyOptions& o) {
    SuiteReport r{"partial-sums", o.seed, {}};
    for (double rho : o.rhos) {
        for (double beta : o.betas) {
            if (beta > 2.0) continue;
            const WrightParams p{rho, beta};
            for (Theorem t : {Theorem::T3, Theorem::T4}) {
                const std::string name = label(t == Theorem::T3 ? "sum of gamma_n^-2 over 50 zeros / delta_1"
                                                                : "sum of sigma_n^-1 over 50 zeros / eta_1",
                                               p);
                guarded(r, name, [&] {
                    const RayleighSums s = rayleigh_sums(t, p);
                    const ZeroSequence zs = first_zeros(zero_family(t), p, 50, o.zeros);
                    double partial = 0.0;
                    for (double z : zs.zeros) partial += std::pow(z, -s.zero_power);
                    const double ratio = partial / s.s1;
                    r.checks.push_back({name, ratio, 0.9, ratio > 0.9 && ratio < 1.0});
                });
            }
        }
    }
    return r;
}

SuiteReport suite_eqszasz(const VerifyOptions& o) {
    SuiteReport r{"eqszasz", o.seed, {}};
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> theta_dist(0.01, 10.0);
    std::uniform_real_distribution<double> frac(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-M_PI, M_PI);
    double worst = INFINITY;
    for (int i = 0; i < 1000; ++i) {
        const double theta = theta_dist(rng);
        const std::complex<double> z = std::polar(theta * frac(rng), angle(rng));
        const double slack = std::abs(z) / (theta - std::abs(z)) - std::real(z / (theta - z));
        worst = std::min(worst, slack);
    }
    r.checks.push_back({"min slack of |z|/(theta-|z|) - Re z/(theta-z) over 1000 draws", worst, 0.0, worst >= 0.0});
    return r;
}

SuiteReport suite_derivatives(const VerifyOptions& o) {
    SuiteReport r{"derivatives", o.seed, {}};
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> rho_dist(0.5, 2.0);
    std::uniform_real_distribution<double> beta_dist(0.5, 3.0);
    std::uniform_real_distribution<double> x_dist(0.2, 2.0);
    constexpr double h = 1e-5;
    for (Family f : {Family::Lambda, Family::Psi, Family::G, Family::H}) {
        for (int i = 0; i < 20; ++i) {
            const WrightParams p{rho_dist(rng), beta_dist(rng)};
            const double x = x_dist(rng);
            std::ostringstream name;
            name << to_string(f) << " derivative at x=" << x;
            guarded(r, label(name.str().c_str(), p), [&] {
                for (int order : {1, 2}) {
                    const auto below = [&](double t) { return order == 1 ? eval(f, p, t).value : eval_derivative(f, p, t, 1).value; };
                    const double fd = (below(x + h) - below(x - h)) / (2.0 * h);
                    const double exact = eval_derivative(f, p, x, order).value;
                    expect_at_most(r, label((name.str() + " order " + std::to_string(order)).c_str(), p),
                                   std::abs(fd - exact) / std::abs(exact), 1e-7);
                }
            });
        }
    }
    return r;
}

SuiteReport suite_gamma(const VerifyOptions& o) {
    SuiteReport r{"gamma", o.seed, {}};
    std::mt19937_64 rng(o.seed);
    std::uniform_real_distribution<double> par(1e-3, 5.0);
    std::uniform_real_distribution<double> coef(0.1, 10.0);
    double worst_linear = 0.0;
    double min_positive = INFINITY;
    for (int i = 0; i < 200; ++i) {
        const WrightParams p{par(rng), par(rng)};
        const double b = coef(rng);
        const double a = b * (1.0 + coef(rng));
        min_positive = std::min(min_positive, log_delta_ab(a, b, p).sign > 0 ? 1.0 : -1.0);
        const double a2 = coef(rng), b2 = coef(rng);
        const double whole = delta_ab(a + a2, b + b2, p);
        const double parts = delta_ab(a, b, p) + delta_ab(a2, b2, p);
        worst_linear = std::max(worst_linear, std::abs(whole - parts) / std::max(std::abs(whole), 1e-300));
    }
    r.checks.push_back({"Delta_{a,b} > 0 for a > b > 0 on 200 random points", min_positive, 0.0, min_positive > 0.0});
    expect_at_most(r, "Delta_{a,b} linear in (a, b)", worst_linear, 1e-12);
    std::uniform_real_distribution<double> xs(1e-3, 100.0);
    double worst_rec = 0.0;
    for (int i = 0; i < 500; ++i) {
        const double x = xs(rng);
        const double lhs = log_gamma(x + 1.0);
        const double rhs = log_gamma(x) + std::log(x);
        worst_rec = std::max(worst_rec, std::abs(lhs - rhs) / std::max(std::abs(lhs), 1.0));
    }
    expect_at_most(r, "ln Gamma(x+1) = ln Gamma(x) + ln x", worst_rec, 1e-13);
    return r;
}

std::vector<std::string> suite_names() {
    return {"reduction", "corollaries", "interlacing", "bracketing", "equivalence", "properties", "all"};
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& o) {
    if (name == "reduction") return suite_reduction(o);
    if (name == "corollaries") return suite_corollaries(o);
    if (name == "interlacing") return suite_interlacing(o);
    if (name == "bracketing") return suite_bracketing(o);
    if (name == "equivalence") return suite_equivalence(o);
    if (name == "properties") {
        SuiteReport r{"properties", o.seed, {}};
        for (auto* suite : {suite_alpha_consistency, suite_monotonicity, suite_partial_sums, suite_eqszasz,
                            suite_derivatives, suite_gamma})
            r.append(suite(o));
        return r;
    }
    if (name == "all") {
        SuiteReport r{"all", o.seed, {}};
        for (const char* s : {"reduction", "corollaries", "interlacing", "bracketing", "equivalence", "properties"})
            r.append(run_suite(s, o));
        return r;
    }
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

}  // namespace wradii
