#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wradii/bessel_crosscheck.hpp"
#include "wradii/errors.hpp"
#include "wradii/euler_rayleigh.hpp"
#include "wradii/radii_solver.hpp"
#include "wradii/verify.hpp"
#include "wradii/wright_eval.hpp"
#include "wradii/zero_finder.hpp"

namespace py = pybind11;
using namespace wradii;

namespace {

py::dict series_dict(const SeriesValue& s) {
    py::dict d;
    d["value"] = s.value;
    d["truncation_bound"] = s.truncation_bound;
    d["abs_sum"] = s.abs_sum;
    d["terms_used"] = s.terms_used;
    return d;
}

py::dict bounds_dict(const BoundsReport& b) {
    py::dict d;
    d["theorem"] = std::string(to_string(b.theorem));
    d["lower_k1"] = b.lower_k1;
    d["lower_k2"] = b.lower_k2;
    d["upper_k2"] = b.upper_k2;
    d["upper_k1"] = b.upper_k1;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Zeros and geometric radii of normalized Wright functions";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<ScanExhaustedError>(m, "ScanExhaustedError", PyExc_RuntimeError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

    m.def(
        "phi",
        [](double rho, double beta, double z) { return phi({rho, beta}, z).value; },
        py::arg("rho"), py::arg("beta"), py::arg("z"));

    m.def(
        "eval",
        [](const std::string& family, double rho, double beta, double x, int order) {
            const Family f = parse_family(family);
            const WrightParams p{rho, beta};
            return series_dict(order == 0 ? eval(f, p, x) : eval_derivative(f, p, x, order));
        },
        py::arg("family"), py::arg("rho"), py::arg("beta"), py::arg("x"), py::arg("order") = 0,
        "Series value of a family (or its derivative) with its error bookkeeping.");

    m.def(
        "first_zeros",
        [](const std::string& family, double rho, double beta, int count, double rel_tol) {
            ZeroOptions o;
            o.rel_tol = rel_tol;
            return first_zeros(parse_family(family), {rho, beta}, count, o).zeros;
        },
        py::arg("family"), py::arg("rho"), py::arg("beta"), py::arg("count"),
        py::arg("rel_tol") = 1e-12);

    m.def(
        "radius",
        [](const std::string& kind, const std::string& norm, double rho, double beta, double alpha,
           double rel_tol) {
            RadiusQuery q{parse_kind(kind), parse_norm(norm), {rho, beta}, alpha};
            RadiusOptions o;
            o.rel_tol = rel_tol;
            const RadiusResult r = radius(q, o);
            py::dict d;
            d["value"] = r.value;
            d["bracket"] = py::make_tuple(r.bracket.lo, r.bracket.hi);
            d["residual"] = r.residual;
            d["upper_domain_zero"] = r.upper_domain_zero;
            d["iterations"] = r.iterations;
            return d;
        },
        py::arg("kind"), py::arg("norm"), py::arg("rho"), py::arg("beta"), py::arg("alpha") = 0.0,
        py::arg("rel_tol") = 1e-12);

    m.def(
        "bounds",
        [](const std::string& theorem, double rho, double beta) {
            return bounds_dict(bounds_closed_form(parse_theorem(theorem), {rho, beta}));
        },
        py::arg("theorem"), py::arg("rho"), py::arg("beta"));

    m.def(
        "rayleigh_sums",
        [](const std::string& theorem, double rho, double beta) {
            const RayleighSums s = rayleigh_sums(parse_theorem(theorem), {rho, beta});
            return py::make_tuple(s.s1, s.s2, s.s3);
        },
        py::arg("theorem"), py::arg("rho"), py::arg("beta"));

    m.def("bessel_j", &bessel_j, py::arg("nu"), py::arg("x"));

    m.def(
        "interlaced",
        [](double rho, double beta, int count) { return check_interlacing({rho, beta}, count).interlaced; },
        py::arg("rho"), py::arg("beta"), py::arg("count") = 10);

    m.def(
        "verify",
        [](const std::string& suite, std::uint64_t seed) {
            VerifyOptions o;
            o.seed = seed;
            SuiteReport r;
            {
                py::gil_scoped_release release;
                r = run_suite(suite, o);
            }
            py::list failed;
            for (const auto& c : r.checks)
                if (!c.passed) failed.append(c.name);
            py::dict d;
            d["suite"] = r.suite;
            d["checks"] = r.checks.size();
            d["failed"] = failed;
            return d;
        },
        py::arg("suite"), py::arg("seed") = VerifyOptions{}.seed);
}
