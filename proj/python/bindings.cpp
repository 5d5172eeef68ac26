// Python bindings for the sinespec core library. Coefficient vectors and
// moment tensors cross the boundary as NumPy arrays; rank-3 tensors use
// C-contiguous (N, N, N) float64 arrays.

#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <vector>

#include "sinespec/bench.hpp"
#include "sinespec/hartree.hpp"
#include "sinespec/mapping.hpp"
#include "sinespec/solvers.hpp"

namespace py = pybind11;
using namespace sinespec;

namespace {

using Array1 = py::array_t<double, py::array::c_style | py::array::forcecast>;
using Array3 = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<double> as_vector(const Array1& a) {
    if (a.ndim() != 1) throw InvalidInputError("expected a 1D array");
    return std::vector<double>(a.data(), a.data() + a.shape(0));
}

Array1 from_vector(const std::vector<double>& v) {
    Array1 out(static_cast<py::ssize_t>(v.size()));
    std::copy(v.begin(), v.end(), out.mutable_data());
    return out;
}

Tensor3 as_tensor(const Array3& a) {
    if (a.ndim() != 3 || a.shape(0) != a.shape(1) || a.shape(0) != a.shape(2)) {
        throw InvalidInputError("expected a cubic (N, N, N) array");
    }
    Tensor3 t(static_cast<int>(a.shape(0)));
    std::copy(a.data(), a.data() + t.flat().size(), t.data());
    return t;
}

Array3 from_tensor(const Tensor3& t) {
    const py::ssize_t n = t.extent();
    Array3 out({n, n, n});
    std::copy(t.flat().begin(), t.flat().end(), out.mutable_data());
    return out;
}

py::array_t<double> matrix_to_dense(const GalerkinMatrix1D& m) {
    const py::ssize_t n = m.dimension();
    py::array_t<double> out({n, n});
    std::fill(out.mutable_data(), out.mutable_data() + n * n, 0.0);
    auto view = out.mutable_unchecked<2>();
    for (const auto& e : m.entries()) view(e.row, e.col) = e.value;
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
    mod.doc() = "Spectral sine-basis Galerkin solvers on arctan-mapped unbounded domains";

    py::register_exception<InvalidInputError>(mod, "InvalidInputError", PyExc_ValueError);
    py::register_exception<DomainEndpointError>(mod, "DomainEndpointError", PyExc_ValueError);
    py::register_exception<EvaluationError>(mod, "EvaluationError", PyExc_ArithmeticError);
    py::register_exception<SingularSystemError>(mod, "SingularSystemError", PyExc_RuntimeError);

    py::enum_<Symmetry>(mod, "Symmetry")
        .value("SYMMETRIC_ABOUT_CENTER", Symmetry::SymmetricAboutCenter)
        .value("ANTISYMMETRIC_ABOUT_CENTER", Symmetry::AntisymmetricAboutCenter);

    py::class_<MetricTerms>(mod, "MetricTerms")
        .def_readonly("inv_jac", &MetricTerms::inv_jac)
        .def_readonly("inv_jac_deriv", &MetricTerms::inv_jac_deriv);

    py::class_<QuadratureRule>(mod, "QuadratureRule")
        .def_property_readonly("nodes", [](const QuadratureRule& r) { return from_vector(r.nodes); })
        .def_property_readonly("weights",
                               [](const QuadratureRule& r) { return from_vector(r.weights); })
        .def("__len__", &QuadratureRule::size);

    py::class_<GalerkinMatrix1D>(mod, "GalerkinMatrix1D")
        .def_property_readonly("dimension", &GalerkinMatrix1D::dimension)
        .def("entry", &GalerkinMatrix1D::entry, py::arg("row"), py::arg("col"))
        .def("to_dense", &matrix_to_dense)
        .def("entries", [](const GalerkinMatrix1D& m) {
            std::vector<std::tuple<int, int, double>> out;
            for (const auto& e : m.entries()) out.emplace_back(e.row, e.col, e.value);
            return out;
        });

    py::class_<OverlapMatrix>(mod, "OverlapMatrix")
        .def_property_readonly("dimension", &OverlapMatrix::dimension)
        .def("to_dense", [](const OverlapMatrix& e) {
            const py::ssize_t n = e.dimension();
            py::array_t<double> out({n, n});
            std::copy(e.values().begin(), e.values().end(), out.mutable_data());
            return out;
        });

    py::class_<SolveReport>(mod, "SolveReport")
        .def_readonly("iterations", &SolveReport::iterations)
        .def_readonly("residual_norm", &SolveReport::residual_norm)
        .def_readonly("converged", &SolveReport::converged)
        .def_readonly("wall_time_s", &SolveReport::wall_time_s);

    mod.def("to_computational", &to_computational, py::arg("x"));
    mod.def("to_physical", &to_physical, py::arg("y"));
    mod.def("metric_terms", &metric_terms, py::arg("y"));
    mod.def(
        "eval_expansion_physical",
        [](const Array1& coeffs, double x) {
            return eval_expansion_physical(SineExpansion1D(as_vector(coeffs)), x);
        },
        py::arg("coefficients"), py::arg("x"));

    mod.def("build_quadrature", &build_quadrature, py::arg("n_points"));
    mod.def(
        "project_1d",
        [](const ScalarFunction& f, const QuadratureRule& rule, int basis_size) {
            return from_vector(project_1d(f, rule, basis_size).values);
        },
        py::arg("f_of_y"), py::arg("rule"), py::arg("basis_size"));
    mod.def(
        "project_1d_physical",
        [](const ScalarFunction& f, const QuadratureRule& rule, int basis_size) {
            return from_vector(project_1d_physical(f, rule, basis_size).values);
        },
        py::arg("f_of_x"), py::arg("rule"), py::arg("basis_size"));
    mod.def(
        "project_3d_separable",
        [](const ScalarFunction& fx, const ScalarFunction& fy, const ScalarFunction& fz,
           const QuadratureRule& rule, int basis_size) {
            return from_tensor(project_3d_separable(fx, fy, fz, rule, basis_size));
        },
        py::arg("fx"), py::arg("fy"), py::arg("fz"), py::arg("rule"), py::arg("basis_size"));
    mod.def(
        "moments_to_coefficients",
        [](const Array1& moments) {
            return from_vector(moments_to_coefficients(MomentVector(as_vector(moments))).c);
        },
        py::arg("moments"));
    mod.def(
        "parity_restrict",
        [](const Array1& values, Symmetry s) {
            return from_vector(parity_restrict(MomentVector(as_vector(values)), s).values);
        },
        py::arg("values"), py::arg("symmetry"));

    mod.def("assemble_poisson_1d", &assemble_poisson_1d, py::arg("basis_size"));
    mod.def("assemble_helmholtz_1d", &assemble_helmholtz_1d, py::arg("basis_size"),
            py::arg("gamma"));
    mod.def(
        "assemble_general_1d",
        [](const ScalarFunction& l2, const ScalarFunction& l1, const ScalarFunction& l0,
           double gamma, int basis_size, const QuadratureRule& rule) {
            return assemble_general_1d(OperatorSpec{l2, l1, l0, gamma}, basis_size, rule);
        },
        py::arg("l2"), py::arg("l1"), py::arg("l0"), py::arg("gamma"), py::arg("basis_size"),
        py::arg("rule"));

    mod.def(
        "solve_1d",
        [](const GalerkinMatrix1D& m, const Array1& f) {
            return from_vector(solve_1d(m, MomentVector(as_vector(f))).c);
        },
        py::arg("matrix"), py::arg("moments"));
    mod.def(
        "kronecker_apply",
        [](const GalerkinMatrix1D& m, const Array3& c) {
            return from_tensor(kronecker_apply(m, as_tensor(c)));
        },
        py::arg("matrix"), py::arg("tensor"));
    mod.def(
        "solve_3d",
        [](const GalerkinMatrix1D& m, const Array3& f, double tol, long max_iter, bool jacobi) {
            Solve3dResult r = solve_3d(m, as_tensor(f), tol, max_iter, jacobi);
            return py::make_tuple(from_tensor(r.solution), r.report);
        },
        py::arg("matrix"), py::arg("moments"), py::arg("tol") = 1e-12, py::arg("max_iter") = -1,
        py::arg("jacobi_precondition") = false);

    mod.def("build_overlap_matrix", &build_overlap_matrix, py::arg("basis_size"));
    mod.def(
        "hartree_energy",
        [](const Array3& c, const Array3& f, double kappa) {
            return hartree_energy(as_tensor(c), as_tensor(f), kappa);
        },
        py::arg("coefficients"), py::arg("moments"), py::arg("kappa"));

    mod.def(
        "run_convergence_1d",
        [](const std::string& case_name, double k, double h, double gamma,
           const std::vector<int>& n_list, int samples, bool use_parity) {
            const auto bc = bench::make_bench_case(bench::parse_decay_class(case_name), k, h, gamma);
            const auto recs = bench::run_convergence_1d(bc, n_list, samples, use_parity);
            py::list out;
            for (const auto& r : recs) {
                py::dict d;
                d["N"] = r.basis_size;
                d["max_norm_error"] = r.max_norm_error;
                d["wall_time_s"] = r.wall_time_s;
                d["restricted"] = r.restricted;
                out.append(d);
            }
            return out;
        },
        py::arg("case_name"), py::arg("k") = 2.0, py::arg("h") = 3.5, py::arg("gamma") = 2.0,
        py::arg("n_list") = std::vector<int>{16, 32, 64, 128, 256}, py::arg("samples") = 1000,
        py::arg("use_parity") = true);
    mod.def(
        "run_table_3d",
        [](double ksq, const std::vector<int>& n_list, double tol, long max_iter) {
            const auto rows = bench::run_table_3d(ksq, n_list, tol, max_iter);
            py::list out;
            for (const auto& r : rows) {
                py::dict d;
                d["N"] = r.basis_size;
                d["hartree_energy"] = r.hartree_energy;
                d["report"] = py::cast(r.report);
                out.append(d);
            }
            return out;
        },
        py::arg("ksq"), py::arg("n_list") = std::vector<int>{15, 25, 37}, py::arg("tol") = 1e-12,
        py::arg("max_iter") = 5000);
}
