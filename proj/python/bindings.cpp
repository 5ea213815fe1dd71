#include "gns/bounds.hpp"
#include "gns/mellin_barnes.hpp"
#include "gns/profiles.hpp"
#include "gns/radial.hpp"
#include "gns/special.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace gns;

namespace {

GnsParams params(int d, const std::string& j, const std::string& n, const std::string& theta, bool inexact) {
    return {d, parse_number(j, inexact), parse_number(n, inexact), parse_number(theta, inexact)};
}

py::object opt(const std::optional<double>& v) { return v ? py::cast(*v) : py::none(); }

py::dict regime_dict(const Regime& r) {
    py::dict o;
    o["kind"] = to_string(r.kind);
    o["r"] = r.r;
    o["plus"] = r.plus;
    o["plusplus"] = r.plusplus;
    o["minusminus"] = r.minusminus;
    o["exact"] = r.exact;
    return o;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sharp Gagliardo-Nirenberg and Sobolev constants: bounds, maximizers, kernels";

    py::register_exception<NumericalError>(m, "NumericalError", PyExc_RuntimeError);

    m.def("gamma", &gamma_real, py::arg("x"));
    m.def("bessel_j", &bessel_j, py::arg("nu"), py::arg("x"));
    m.def("bessel_k", &bessel_k, py::arg("mu"), py::arg("x"));
    m.def("hyp2f1_neg", &hyp2f1_neg, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("rho2"));

    m.def(
        "meijer_g",
        [](std::vector<double> a, std::vector<double> a_star, std::vector<double> b, std::vector<double> b_star,
           double z) {
            GFunctionSpec s{std::move(a), std::move(a_star), std::move(b), std::move(b_star)};
            return eval_g(s, z, {});
        },
        py::arg("a"), py::arg("a_star"), py::arg("b"), py::arg("b_star"), py::arg("z"));

    m.def(
        "profile_ab",
        [](double a, double b, int d, double rho, const std::string& method) {
            return profile_ab({a, b, d}, rho, parse_method(method), {});
        },
        py::arg("a"), py::arg("b"), py::arg("d"), py::arg("rho"), py::arg("method") = "automatic");
    m.def(
        "f_linf",
        [](double j, double n, int d, double rho, const std::string& method) {
            return f_linf(j, n, d, rho, parse_method(method), {});
        },
        py::arg("j"), py::arg("n"), py::arg("d"), py::arg("rho"), py::arg("method") = "automatic");
    m.def(
        "g_spec",
        [](double j, double n, int d, int N, int M) {
            return g_spec_for_profile(linf_profile(j, n, d), N, M).to_string();
        },
        py::arg("j"), py::arg("n"), py::arg("d"), py::arg("N"), py::arg("M") = 1);
    m.def("theta1_maximizer", &theta1_maximizer, py::arg("j"), py::arg("n"), py::arg("d"), py::arg("rho"));

    m.def(
        "classify",
        [](int d, const std::string& j, const std::string& n, const std::string& theta, bool inexact) {
            return regime_dict(classify(params(d, j, n, theta, inexact)));
        },
        py::arg("d"), py::arg("j"), py::arg("n"), py::arg("theta"), py::arg("inexact") = false);

    m.def(
        "sharp_linf",
        [](double j, double n, int d) {
            const auto s = sharp_linf(j, n, d);
            return py::dict(py::arg("theta") = s.theta, py::arg("S") = s.S, py::arg("G") = s.G);
        },
        py::arg("j"), py::arg("n"), py::arg("d"));
    m.def(
        "sharp_theta1", [](double j, double n, int d) { return sharp_theta1(j, n, d).G; }, py::arg("j"), py::arg("n"),
        py::arg("d"));
    m.def(
        "upper_plus", [](double j, double n, double th, int d) { return upper_plus(j, n, th, d).G; }, py::arg("j"),
        py::arg("n"), py::arg("theta"), py::arg("d"));
    m.def(
        "upper_plusplus", [](double j, double n, double th, int d) { return upper_plusplus(j, n, th, d).G; },
        py::arg("j"), py::arg("n"), py::arg("theta"), py::arg("d"));
    m.def(
        "lower_minusminus", [](double j, double n, double th, int d) { return lower_minusminus(j, n, th, d).G; },
        py::arg("j"), py::arg("n"), py::arg("theta"), py::arg("d"));
    m.def(
        "lower_minus",
        [](double j, double n, double th, int d, double lo, double hi, double step, int threads) {
            EpsGrid g;
            g.lo = lo;
            g.hi = hi;
            g.step = step;
            g.threads = threads;
            py::gil_scoped_release release;
            const auto r = lower_minus(j, n, th, d, {}, g);
            py::gil_scoped_acquire acquire;
            return py::dict(py::arg("G") = r.G, py::arg("S") = r.S, py::arg("eps") = r.eps,
                            py::arg("grid_points") = r.grid_points);
        },
        py::arg("j"), py::arg("n"), py::arg("theta"), py::arg("d"), py::arg("lo") = 0.01, py::arg("hi") = 5.0,
        py::arg("step") = 0.01, py::arg("threads") = 0);
    m.def("riesz_constant", &riesz_constant, py::arg("n"), py::arg("d"));
    m.def("hls_constant", &hls_constant, py::arg("n"), py::arg("d"));

    m.def(
        "best_bounds",
        [](int d, const std::string& j, const std::string& n, const std::string& theta, bool minus, double lo,
           double hi, double step, bool inexact) {
            BoundsOptions o;
            o.minus = minus;
            o.grid.lo = lo;
            o.grid.hi = hi;
            o.grid.step = step;
            BoundsReport r;
            {
                py::gil_scoped_release release;
                r = best_bounds(params(d, j, n, theta, inexact), {}, o);
            }
            py::dict out;
            out["regime"] = regime_dict(r.regime);
            out["exact_g"] = opt(r.exact_g);
            out["exact_s"] = opt(r.exact_s);
            out["g_plus"] = opt(r.g_plus);
            out["g_plusplus"] = opt(r.g_plusplus);
            out["g_minus"] = opt(r.g_minus);
            out["minus_eps"] = opt(r.minus_eps);
            out["g_minusminus"] = opt(r.g_minusminus);
            out["best_lower_g"] = r.best_lower_g;
            out["best_upper_g"] = r.best_upper_g;
            out["best_lower_s"] = r.best_lower_s;
            out["best_upper_s"] = r.best_upper_s;
            return out;
        },
        py::arg("d"), py::arg("j"), py::arg("n"), py::arg("theta"), py::arg("minus") = true, py::arg("lo") = 0.01,
        py::arg("hi") = 5.0, py::arg("step") = 0.01, py::arg("inexact") = false);
}
