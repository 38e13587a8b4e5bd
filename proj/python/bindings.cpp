#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "renyi_cf/cf_core.hpp"
#include "renyi_cf/cli.hpp"
#include "renyi_cf/errors.hpp"
#include "renyi_cf/gauss_kuzmin.hpp"
#include "renyi_cf/measures.hpp"
#include "renyi_cf/transfer_op.hpp"

namespace py = pybind11;
using namespace renyi;

namespace {

std::vector<Digit> expand_digits(const std::string& x, std::size_t n, Digit N) {
    const Expansion e = expand(parse_rational(x), n, CFParams(N));
    const auto d = e.digits.digits();
    return {d.begin(), d.end()};
}

py::dict report_dict(const ErrorReport& r) {
    py::dict d;
    d["N"] = r.N;
    d["t"] = r.t;
    d["n"] = r.n;
    d["method"] = to_string(r.method);
    d["sup_error"] = r.sup_error;
    d["marginal_sup"] = r.marginal_sup;
    d["lower_bound"] = r.lower_bound;
    d["upper_bound"] = r.upper_bound;
    d["tolerance"] = r.tolerance;
    d["tail"] = r.tail;
    d["argmax"] = py::make_tuple(r.argmax_x, r.argmax_y);
    d["samples"] = r.samples;
    return d;
}

py::dict gk_sup_error(Digit N, double t, std::size_t n, const std::string& method, std::size_t resolution,
                      Digit cutoff, std::uint64_t samples, std::uint64_t seed) {
    SupOptions so;
    so.method = parse_method(method);
    so.resolution = resolution;
    so.exact.cutoff = cutoff;
    so.mc.samples = samples;
    so.mc.seed = seed;
    ErrorReport r;
    {
        py::gil_scoped_release release;
        r = sup_error(t, n, MeasureParams(N), so);
    }
    return report_dict(r);
}

py::tuple run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "renyi-cf");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_renyi_cf, mod) {
    py::register_exception<Error>(mod, "RenyiError", PyExc_RuntimeError);

    mod.def("renyi_map", [](double x, Digit N) { return renyi_map(x, CFParams(N)); }, py::arg("x"), py::arg("N"));
    mod.def("expand", &expand_digits, py::arg("x"), py::arg("n"), py::arg("N"),
            "digits of x (\"p/q\" or decimal, read exactly)");
    mod.def("cylinder_weight",
            [](std::vector<Digit> w, double t, Digit N) { return cylinder_weight(DigitSequence(CFParams(N), w), t); },
            py::arg("digits"), py::arg("t"), py::arg("N"));
    mod.def("cylinder_weight_qpoly",
            [](std::vector<Digit> w, double t, Digit N) {
                return cylinder_weight_qpoly(DigitSequence(CFParams(N), w), t);
            },
            py::arg("digits"), py::arg("t"), py::arg("N"));
    mod.def("rho_cdf", [](double x, Digit N) { return rho_cdf(x, MeasureParams(N)); }, py::arg("x"), py::arg("N"));
    mod.def("limit_cdf", [](double x, double y, Digit N) { return limit_cdf(x, y, MeasureParams(N)); },
            py::arg("x"), py::arg("y"), py::arg("N"));
    mod.def("k_constant", [](Digit N) { return k_constant(MeasureParams(N)); }, py::arg("N"));
    mod.def("contraction_ratio", [](Digit N) { return contraction_ratio(MeasureParams(N)); }, py::arg("N"));
    mod.def("gk_lower_bound", [](Digit N, std::size_t n) { return gk_lower_bound(MeasureParams(N), n); },
            py::arg("N"), py::arg("n"));
    mod.def("gk_upper_bound", [](Digit N, std::size_t n) { return gk_upper_bound(MeasureParams(N), n); },
            py::arg("N"), py::arg("n"));
    mod.def("bounds_table",
            [](const std::vector<Digit>& Ns) {
                std::vector<std::tuple<Digit, double, double>> rows;
                for (const auto& r : bounds_table(Ns)) rows.emplace_back(r.N, r.lower, r.upper);
                return rows;
            },
            py::arg("Ns"));
    mod.def("sup_error", &gk_sup_error, py::arg("N"), py::arg("t"), py::arg("n"), py::arg("method") = "exact",
            py::arg("resolution") = 513, py::arg("cutoff") = 60, py::arg("samples") = 1000000, py::arg("seed") = 1);
    mod.def("run_cli", &run_cli, py::arg("args"), "run the command-line front end; returns (status, stdout, stderr)");
}
