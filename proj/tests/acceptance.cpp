// Acceptance suite: one PASS/FAIL line per criterion.
//
//   acceptance               run every criterion
//   acceptance --criterion N run criterion N only
//
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "wradii/verify.hpp"

using namespace wradii;

namespace {

struct Criterion {
    int id;
    const char* title;
    std::function<SuiteReport(const VerifyOptions&)> run;
};

bool keeps_corollary_expression(const CheckResult& c) {
    return c.name.find("_k") != std::string::npos || c.name.find(" root ") != std::string::npos;
}

SuiteReport corollary_reproduction(const VerifyOptions& o) {
    VerifyOptions local = o;
    local.nus = {0.0, 1.0, 2.0};
    SuiteReport all = suite_corollaries(local);
    SuiteReport kept{"corollary-reproduction", o.seed, {}};
    std::copy_if(all.checks.begin(), all.checks.end(), std::back_inserter(kept.checks), keeps_corollary_expression);
    return kept;
}

std::vector<Criterion> criteria() {
    return {
        {1, "Bessel reduction, relative error <= 1e-12", suite_reduction},
        {2, "Corollary reproduction at rho = 1, nu = 0, 1, 2, relative 1e-12", corollary_reproduction},
        {3, "Bracketing of alpha = 0 radii by (lower_k2, upper_k2) and ladder order", suite_bracketing},
        {4, "Interlacing of the first 5 zeros of Psi' and lambda", suite_interlacing},
        {5, "alpha = 0 radii equal first zeros of psi, Omega, Theta, omega to 1e-10", suite_alpha_consistency},
        {6, "Closed form = power-sum bounds on 100 random draws, relative 1e-11", suite_equivalence},
        {7, "Radii strictly decrease in alpha for all six cases", suite_monotonicity},
        {8, "50-zero partial sums inside (0.9 s1, s1) for delta and eta", suite_partial_sums},
        {9, "Szasz-type inequality on 1000 seeded pairs", suite_eqszasz},
        {10, "eval_derivative vs central differences, relative 1e-7", suite_derivatives},
    };
}

void print_result(const Criterion& c, const SuiteReport& r, double seconds) {
    std::printf("criterion %2d %s  %s  [%zu/%zu checks, %.2fs]\n", c.id, r.passed() ? "PASS" : "FAIL", c.title,
                r.checks.size() - r.failures(), r.checks.size(), seconds);
    std::size_t shown = 0;
    for (const auto& check : r.checks) {
        if (check.passed) continue;
        if (shown++ == 12) {
            std::printf("      ... %zu more\n", r.failures() - 12);
            break;
        }
        std::printf("      failed: %s  measured=%.6g limit=%.6g\n", check.name.c_str(), check.measured, check.limit);
    }
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else {
            std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
            return 2;
        }
    }

    const VerifyOptions options;
    std::printf("seed %llu\n", static_cast<unsigned long long>(options.seed));
    int failed = 0, ran = 0;
    for (const Criterion& c : criteria()) {
        if (only != 0 && c.id != only) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        const SuiteReport r = c.run(options);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        print_result(c, r, seconds);
        if (!r.passed()) ++failed;
    }
    if (ran == 0) {
        std::fprintf(stderr, "no criterion %d\n", only);
        return 2;
    }
    return failed == 0 ? 0 : 1;
}
