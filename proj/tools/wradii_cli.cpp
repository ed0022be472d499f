// wradii: command line front end for the Wright radii library.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "wradii/errors.hpp"
#include "wradii/euler_rayleigh.hpp"
#include "wradii/radii_solver.hpp"
#include "wradii/records.hpp"
#include "wradii/verify.hpp"
#include "wradii/wright_eval.hpp"
#include "wradii/zero_finder.hpp"

using nlohmann::json;
using namespace wradii;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kUsage = 2, kDomain = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    RadiusOptions radius;
    ZeroOptions zeros;
};

Tolerances tolerances_from_env() {
    Tolerances t;
    if (const char* env = std::getenv("WRADII_TOL"); env && *env) {
        char* end = nullptr;
        const double tol = std::strtod(env, &end);
        if (*end != '\0' || !(tol > 0.0) || !(tol < 1.0))
            throw UsageError(std::string("WRADII_TOL must be a number in (0, 1), got '") + env + "'");
        t.radius.rel_tol = tol;
        t.zeros.rel_tol = tol;
    }
    return t;
}

double parse_double(const std::string& s, const std::string& what) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || !std::isfinite(v)) throw UsageError("bad number '" + s + "' in " + what);
    return v;
}

// "a:b:step" or a single value "a".
std::vector<double> parse_grid(const std::string& text, const std::string& flag) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() == 1) return {parse_double(parts[0], flag)};
    if (parts.size() != 3) throw UsageError(flag + " expects start:stop:step, got '" + text + "'");
    const double a = parse_double(parts[0], flag), b = parse_double(parts[1], flag), h = parse_double(parts[2], flag);
    if (!(h > 0.0)) throw UsageError(flag + " needs step > 0");
    if (a > b) throw UsageError(flag + " needs start <= stop");
    const auto n = static_cast<long>(std::floor((b - a) / h * (1.0 + 1e-12) + 1e-9)) + 1;
    if (n > 1000000) throw UsageError(flag + " has too many points");
    std::vector<double> out;
    for (long i = 0; i < n; ++i) out.push_back(a + static_cast<double>(i) * h);
    return out;
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
    std::vector<double> out;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_double(p, flag));
    if (out.empty()) throw UsageError(flag + " is empty");
    return out;
}

json number_or_null(const std::optional<double>& v) { return v ? json(*v) : json(); }

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

struct Common {
    double rho = 1.0;
    double beta = 1.0;
    std::string format = "json";
    std::string out;
    WrightParams params() const { return {rho, beta}; }
};

void add_params(CLI::App* cmd, Common& c) {
    cmd->add_option("--rho", c.rho, "Wright parameter rho");
    cmd->add_option("--beta", c.beta, "Wright parameter beta");
}

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", c.out, "write to FILE instead of stdout");
}

int cmd_eval(const Common& c, const std::string& family_name, double x, int order) {
    const Family family = parse_family(family_name);
    const SeriesValue v = order == 0 ? eval(family, c.params(), x) : eval_derivative(family, c.params(), x, order);
    Output out(c.out);
    if (c.format == "json") {
        out.stream() << json{{"family", to_string(family)}, {"rho", c.rho},      {"beta", c.beta},
                             {"x", x},                      {"order", order},    {"value", v.value},
                             {"truncation_bound", v.truncation_bound},           {"terms_used", v.terms_used}}
                            .dump(2)
                     << '\n';
    } else {
        out.stream() << "family,rho,beta,x,order,value,truncation_bound,terms_used\n"
                     << to_string(family) << ',' << format_number(c.rho) << ',' << format_number(c.beta) << ','
                     << format_number(x) << ',' << order << ',' << format_number(v.value) << ','
                     << format_number(v.truncation_bound) << ',' << v.terms_used << '\n';
    }
    return kOk;
}

int cmd_zeros(const Common& c, const std::string& family_name, int count, const Tolerances& tol) {
    const ZeroSequence z = first_zeros(parse_family(family_name), c.params(), count, tol.zeros);
    Output out(c.out);
    if (c.format == "json") {
        json brackets = json::array();
        for (const auto& b : z.brackets) brackets.push_back({b.lo, b.hi});
        out.stream() << json{{"family", to_string(z.family)}, {"rho", c.rho}, {"beta", c.beta},
                             {"zeros", z.zeros},             {"brackets", brackets}}
                            .dump(2)
                     << '\n';
    } else {
        out.stream() << "index,zero,lo,hi\n";
        for (std::size_t i = 0; i < z.zeros.size(); ++i)
            out.stream() << i + 1 << ',' << format_number(z.zeros[i]) << ',' << format_number(z.brackets[i].lo) << ','
                         << format_number(z.brackets[i].hi) << '\n';
    }
    return kOk;
}

int cmd_radius(const Common& c, const std::string& kind, const std::string& norm, double alpha,
               const Tolerances& tol) {
    const RadiusQuery q{parse_kind(kind), parse_norm(norm), c.params(), alpha};
    const RadiusResult r = radius(q, tol.radius);
    const OutputRecord rec = make_record(q, r);
    Output out(c.out);
    if (c.format == "json") {
        json j = to_json(rec);
        j["bracket"] = {r.bracket.lo, r.bracket.hi};
        j["upper_domain_zero"] = r.upper_domain_zero;
        j["iterations"] = r.iterations;
        out.stream() << j.dump(2) << '\n';
    } else {
        out.stream() << to_csv({rec});
    }
    return kOk;
}

int cmd_bounds(const Common& c, const std::string& theorem) {
    const BoundsReport b = bounds_closed_form(parse_theorem(theorem), c.params());
    Output out(c.out);
    if (c.format == "json") {
        out.stream() << json{{"theorem", to_string(b.theorem)}, {"rho", c.rho},           {"beta", c.beta},
                             {"lower_k1", b.lower_k1},          {"lower_k2", b.lower_k2}, {"upper_k2", b.upper_k2},
                             {"upper_k1", b.upper_k1}}
                            .dump(2)
                     << '\n';
    } else {
        out.stream() << "theorem,rho,beta,lower_k1,lower_k2,upper_k2,upper_k1\n"
                     << to_string(b.theorem) << ',' << format_number(c.rho) << ',' << format_number(c.beta) << ','
                     << format_number(b.lower_k1) << ',' << format_number(b.lower_k2) << ','
                     << format_number(b.upper_k2) << ',' << format_number(b.upper_k1) << '\n';
    }
    return kOk;
}

int cmd_table(const Common& c, const std::string& kind, const std::string& norm, const std::string& rho_grid,
              const std::string& beta_grid, const std::string& alpha_grid, const Tolerances& tol) {
    std::vector<RadiusKind> kinds{RadiusKind::Starlike, RadiusKind::Convex};
    std::vector<Norm> norms{Norm::F, Norm::G, Norm::H};
    if (!kind.empty()) kinds = {parse_kind(kind)};
    if (!norm.empty()) norms = {parse_norm(norm)};
    const auto rhos = parse_grid(rho_grid, "--rho-grid");
    const auto betas = parse_grid(beta_grid, "--beta-grid");
    const auto alphas = parse_grid(alpha_grid, "--alpha-grid");

    std::vector<RadiusQuery> queries;
    for (double rho : rhos)
        for (double beta : betas)
            for (RadiusKind k : kinds)
                for (Norm n : norms)
                    for (double a : alphas) queries.push_back({k, n, {rho, beta}, a});

    std::vector<OutputRecord> rows(queries.size());
    std::vector<std::exception_ptr> errors(queries.size());
    std::atomic<std::size_t> next{0};
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                             static_cast<unsigned>(queries.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < queries.size(); i = next++) {
                    try {
                        rows[i] = make_record(queries[i], tol.radius);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Output out(c.out);
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        out.stream() << arr.dump(2) << '\n';
    } else {
        out.stream() << to_csv(rows);
    }
    return kOk;
}

int cmd_verify(const Common& c, const std::string& suite, const std::string& nus, std::uint64_t seed,
               const Tolerances& tol) {
    VerifyOptions o;
    o.nus = parse_list(nus, "--nu");
    o.seed = seed;
    o.radius = tol.radius;
    o.zeros = tol.zeros;
    const SuiteReport r = run_suite(suite, o);
    Output out(c.out);
    if (c.format == "json") {
        json checks = json::array();
        json failures = json::array();
        for (const auto& ch : r.checks) {
            json j{{"name", ch.name}, {"measured", std::isfinite(ch.measured) ? json(ch.measured) : json()},
                   {"limit", ch.limit}, {"passed", ch.passed}};
            if (!ch.passed) failures.push_back(j);
            checks.push_back(std::move(j));
        }
        out.stream() << json{{"suite", r.suite},   {"seed", r.seed},         {"passed", r.passed()},
                             {"checks", r.checks.size()}, {"failures", failures}, {"results", checks}}
                            .dump(2)
                     << '\n';
    } else {
        out.stream() << "suite,seed,check,measured,limit,passed\n";
        for (const auto& ch : r.checks)
            out.stream() << r.suite << ',' << r.seed << ',' << csv_quote(ch.name) << ','
                         << (std::isfinite(ch.measured) ? format_number(ch.measured) : std::string()) << ','
                         << format_number(ch.limit) << ',' << (ch.passed ? "true" : "false") << '\n';
    }
    std::cerr << "verify " << r.suite << ": " << r.checks.size() << " checks, " << r.failures()
              << " failed, seed " << r.seed << '\n';
    for (const auto& ch : r.checks)
        if (!ch.passed) std::cerr << "FAIL " << ch.name << '\n';
    return r.passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radii of starlikeness and convexity for normalized Wright functions"};
    app.require_subcommand(1);

    Common common;
    std::string family = "lambda", kind = "starlike", norm = "g", theorem = "T3";
    std::string rho_grid, beta_grid, alpha_grid = "0", suite = "all", nus = "0,1,2";
    std::string table_kind, table_norm;
    double x = 0.0, alpha = 0.0;
    int order = 0, count = 5;
    std::uint64_t seed = VerifyOptions{}.seed;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a function family at a point");
    add_params(eval_cmd, common);
    add_format(eval_cmd, common);
    eval_cmd->add_option("--family", family, "lambda|psi|psiprime|smallpsi|omegacap|theta|omegalow|f|g|h");
    eval_cmd->add_option("--x", x, "evaluation point")->required();
    eval_cmd->add_option("--order", order, "0 for the value, 1 or 2 for a derivative")->check(CLI::Range(0, 2));

    auto* zeros_cmd = app.add_subcommand("zeros", "first positive zeros of a family");
    add_params(zeros_cmd, common);
    add_format(zeros_cmd, common);
    zeros_cmd->add_option("--family", family, "function family");
    zeros_cmd->add_option("--count", count, "number of zeros")->check(CLI::Range(1, 100000));

    auto* radius_cmd = app.add_subcommand("radius", "radius of starlikeness or convexity of order alpha");
    add_params(radius_cmd, common);
    add_format(radius_cmd, common);
    radius_cmd->add_option("--kind", kind, "starlike|convex");
    radius_cmd->add_option("--norm", norm, "f|g|h");
    radius_cmd->add_option("--alpha", alpha, "order alpha in [0, 1)");

    auto* bounds_cmd = app.add_subcommand("bounds", "Euler-Rayleigh bounds of one theorem");
    add_params(bounds_cmd, common);
    add_format(bounds_cmd, common);
    bounds_cmd->add_option("--theorem", theorem, "T2|T3|T4|T6|T7");

    auto* table_cmd = app.add_subcommand("table", "radius table over a parameter grid");
    add_format(table_cmd, common);
    table_cmd->add_option("--kind", table_kind, "starlike|convex (default both)");
    table_cmd->add_option("--norm", table_norm, "f|g|h (default all)");
    table_cmd->add_option("--rho-grid", rho_grid, "start:stop:step")->required();
    table_cmd->add_option("--beta-grid", beta_grid, "start:stop:step")->required();
    table_cmd->add_option("--alpha-grid", alpha_grid, "start:stop:step");

    auto* verify_cmd = app.add_subcommand("verify", "run an invariant suite");
    add_format(verify_cmd, common);
    verify_cmd->add_option("--suite", suite, "reduction|corollaries|interlacing|bracketing|equivalence|properties|all");
    verify_cmd->add_option("--nu", nus, "comma separated Bessel orders");
    verify_cmd->add_option("--seed", seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }
    // table defaults to CSV unless --format was given
    if (table_cmd->parsed() && table_cmd->count("--format") == 0) common.format = "csv";

    try {
        const Tolerances tol = tolerances_from_env();
        if (eval_cmd->parsed()) return cmd_eval(common, family, x, order);
        if (zeros_cmd->parsed()) return cmd_zeros(common, family, count, tol);
        if (radius_cmd->parsed()) return cmd_radius(common, kind, norm, alpha, tol);
        if (bounds_cmd->parsed()) return cmd_bounds(common, theorem);
        if (table_cmd->parsed()) return cmd_table(common, table_kind, table_norm, rho_grid, beta_grid, alpha_grid, tol);
        if (verify_cmd->parsed()) return cmd_verify(common, suite, nus, seed, tol);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kVerifyFailed;
    }
    return kUsage;
}
