#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>

#include "cvtailor/acceptance.hpp"
#include "cvtailor/alphabet.hpp"
#include "cvtailor/experiments.hpp"
#include "cvtailor/fidelity.hpp"
#include "cvtailor/measurement.hpp"
#include "cvtailor/optimizer.hpp"
#include "cvtailor/protocol.hpp"
#include "cvtailor/strategies.hpp"

namespace py = pybind11;
using namespace cvtailor;

namespace {

ComplexAmplitude amp(std::complex<double> z) { return {z.real(), z.imag()}; }
std::complex<double> cplx(ComplexAmplitude a) { return a.to_complex(); }

py::tuple as_tuple(const QuadratureVariances& v) { return py::make_tuple(v.v_plus, v.v_minus); }

py::dict as_dict(const QuadratureCoefficients& c) {
    py::dict d;
    d["c_v1"] = c.c_v1;
    d["c_v2"] = c.c_v2;
    d["c_in"] = c.c_in;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Tailored continuous-variable teleportation: variances, fidelities, strategies and optimisers";

    py::register_exception<NonFiniteObjective>(m, "NonFiniteObjective", PyExc_ArithmeticError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<SqueezeLevel>(m, "SqueezeLevel")
        .def_static("from_gain", &SqueezeLevel::from_gain, py::arg("G"))
        .def_static("from_lambda", &SqueezeLevel::from_lambda, py::arg("lam"))
        .def_property_readonly("gain", &SqueezeLevel::gain)
        .def_property_readonly("lambda_", &SqueezeLevel::lambda)
        .def("__repr__", [](const SqueezeLevel& s) {
            return "SqueezeLevel(G=" + format_real(s.gain()) + ", lambda=" + format_real(s.lambda()) + ")";
        });

    m.attr("MAX_ETA") = kMaxEta;
    m.attr("LAMBDA_CAP") = kLambdaCap;

    // protocol
    m.def("g1_of_eta", &g1_of_eta, py::arg("eta"));
    m.def("g2_optimal", &g2_optimal, py::arg("sq"), py::arg("eta"));
    m.def(
        "variances_tailored",
        [](const SqueezeLevel& sq, double eta, double g2) { return as_tuple(variances_tailored(sq, eta, g2)); },
        py::arg("sq"), py::arg("eta"), py::arg("g2"), "(V+, V-) with g1 fixed by g1_of_eta");
    m.def(
        "variance_standard_gain",
        [](const SqueezeLevel& sq, double g) { return as_tuple(variance_standard_gain(sq, g)); }, py::arg("sq"),
        py::arg("g"));
    m.def(
        "output_coefficients_tailored",
        [](const SqueezeLevel& sq, double eta, double g1, double g2) {
            const auto c = output_coefficients_tailored(sq, {eta, g1, g2});
            return py::make_tuple(as_dict(c.plus), as_dict(c.minus));
        },
        py::arg("sq"), py::arg("eta"), py::arg("g1"), py::arg("g2"));

    // fidelity
    m.def(
        "one_shot_fidelity",
        [](std::complex<double> alpha, std::complex<double> beta, std::complex<double> eps, const SqueezeLevel& sq) {
            return one_shot_fidelity(amp(alpha), amp(beta), amp(eps), sq).value();
        },
        py::arg("alpha"), py::arg("beta"), py::arg("epsilon"), py::arg("sq"));
    m.def(
        "avg_fidelity_unit_gain",
        [](double vp, double vm) { return avg_fidelity_unit_gain({vp, vm}).value(); }, py::arg("v_plus"),
        py::arg("v_minus"));
    m.def(
        "avg_fidelity_general_gain",
        [](double vp, double vm, double g, std::complex<double> alpha) {
            return avg_fidelity_general_gain({vp, vm}, g, amp(alpha)).value();
        },
        py::arg("v_plus"), py::arg("v_minus"), py::arg("g"), py::arg("alpha"));
    m.def(
        "bfk_classical_limit", [](double s) { return bfk_classical_limit(s).value(); }, py::arg("s"));

    // strategies
    py::class_<strategy::Standard>(m, "Standard")
        .def(py::init<double>(), py::arg("gain") = 1.0)
        .def_readonly("gain", &strategy::Standard::gain);
    py::class_<strategy::OptimalKnownTarget>(m, "OptimalKnownTarget").def(py::init<>());
    py::class_<strategy::LineTailored>(m, "LineTailored").def(py::init<>());
    py::class_<strategy::CircleTailored>(m, "CircleTailored")
        .def(py::init<double>(), py::arg("radius"))
        .def_readonly("radius", &strategy::CircleTailored::radius);

    m.def(
        "optimal_displacement",
        [](std::complex<double> guess, std::complex<double> beta, const SqueezeLevel& sq) {
            return cplx(optimal_displacement(amp(guess), amp(beta), sq));
        },
        py::arg("alpha_guess"), py::arg("beta"), py::arg("sq"));
    m.def(
        "line_displacement",
        [](std::complex<double> beta, const SqueezeLevel& sq) { return cplx(line_displacement(amp(beta), sq)); },
        py::arg("beta"), py::arg("sq"));
    m.def(
        "circle_displacement",
        [](std::complex<double> beta, double radius, const SqueezeLevel& sq) {
            const auto r = circle_displacement(amp(beta), radius, sq);
            return py::make_tuple(cplx(r.epsilon), r.origin_tiebreak);
        },
        py::arg("beta"), py::arg("radius"), py::arg("sq"), "(epsilon, origin_tiebreak)");
    m.def(
        "standard_displacement",
        [](std::complex<double> beta, double g) { return cplx(standard_displacement(amp(beta), g)); },
        py::arg("beta"), py::arg("g"));

    // measurement engine
    py::class_<McEstimate>(m, "McEstimate")
        .def_readonly("mean", &McEstimate::mean)
        .def_readonly("std_error", &McEstimate::std_error)
        .def_readonly("n_samples", &McEstimate::n_samples)
        .def_readonly("seed", &McEstimate::seed)
        .def("__repr__", [](const McEstimate& e) {
            return "McEstimate(mean=" + format_real(e.mean) + ", std_error=" + format_real(e.std_error) + ")";
        });
    m.def(
        "mc_average_fidelity",
        [](const Strategy& s, std::complex<double> alpha, const SqueezeLevel& sq, std::size_t n, std::uint64_t seed,
           std::size_t threads) {
            py::gil_scoped_release release;
            return mc_average_fidelity(s, amp(alpha), sq, n, seed, {.threads = threads});
        },
        py::arg("strategy"), py::arg("alpha"), py::arg("sq"), py::arg("n"), py::arg("seed"), py::arg("threads") = 1);
    m.def(
        "quadrature_average_fidelity",
        [](const Strategy& s, std::complex<double> alpha, const SqueezeLevel& sq, int order) {
            return quadrature_average_fidelity(s, amp(alpha), sq, order);
        },
        py::arg("strategy"), py::arg("alpha"), py::arg("sq"), py::arg("order") = 64);

    // alphabet
    m.def("gaussian_weighted_fidelity", &gaussian_weighted_fidelity, py::arg("sq"), py::arg("g"), py::arg("s"));
    m.def("gaussian_weighted_fidelity_quadrature", &gaussian_weighted_fidelity_quadrature, py::arg("sq"),
          py::arg("g"), py::arg("s_x"), py::arg("s_y"), py::arg("order") = 64);

    // optimizer
    py::class_<OptimizationResult>(m, "OptimizationResult")
        .def_readonly("argmax", &OptimizationResult::argmax)
        .def_readonly("value", &OptimizationResult::value)
        .def_readonly("evaluations", &OptimizationResult::evaluations)
        .def_readonly("tolerance", &OptimizationResult::tolerance);
    m.def("optimize_gain", &optimize_gain, py::arg("sq"), py::arg("s"), py::arg("tol") = kDefaultTolerance);
    m.def("optimize_eta_g2", &optimize_eta_g2, py::arg("sq"), py::arg("tol") = kDefaultTolerance);

    // experiments
    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("lambda_grid", &ExperimentConfig::lambda_grid)
        .def_readwrite("n_samples", &ExperimentConfig::n_samples)
        .def_readwrite("seed", &ExperimentConfig::seed)
        .def_readwrite("alpha_line", &ExperimentConfig::alpha_line)
        .def_readwrite("s", &ExperimentConfig::s)
        .def_readwrite("tol", &ExperimentConfig::tol)
        .def_readwrite("threads", &ExperimentConfig::threads);
    py::class_<Dataset>(m, "Dataset")
        .def_readonly("columns", &Dataset::columns)
        .def_readonly("rows", &Dataset::rows)
        .def_readonly("summary", &Dataset::summary)
        .def("column", &Dataset::column);
    m.def("lambda_grid", &lambda_grid, py::arg("points") = 50);
    m.def("run_fig1", &run_fig1, py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("run_fig3", &run_fig3, py::arg("config"), py::call_guard<py::gil_scoped_release>());
    m.def("run_gaussian_alphabet", &run_gaussian_alphabet, py::arg("config"),
          py::call_guard<py::gil_scoped_release>());
    m.def("run_circle_vs_line", &run_circle_vs_line, py::arg("config"), py::call_guard<py::gil_scoped_release>());

    py::class_<CriterionResult>(m, "CriterionResult")
        .def_readonly("id", &CriterionResult::id)
        .def_readonly("name", &CriterionResult::name)
        .def_readonly("passed", &CriterionResult::passed)
        .def_readonly("detail", &CriterionResult::detail);
    m.def(
        "run_acceptance",
        [](std::uint64_t seed, std::size_t threads) { return run_acceptance({.seed = seed, .threads = threads}); },
        py::arg("seed") = AcceptanceOptions{}.seed, py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
}
