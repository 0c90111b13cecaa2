#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bcpw/bicomplex.hpp"
#include "bcpw/cauchy.hpp"
#include "bcpw/densities.hpp"
#include "bcpw/io.hpp"
#include "bcpw/paley_wiener.hpp"
#include "bcpw/quadrature.hpp"
#include "bcpw/transform.hpp"
#include "bcpw/verify.hpp"

namespace py = pybind11;
using namespace bcpw;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Bicomplex analysis toolkit: idempotent algebra, D-valued quadrature, "
              "Fourier transforms, half-plane extensions and Cauchy integrals";

    py::register_exception<ZeroDivisorError>(m, "ZeroDivisorError", PyExc_ArithmeticError);
    py::register_exception<BadTruncationError>(m, "BadTruncationError", PyExc_ValueError);
    py::register_exception<NonFiniteError>(m, "NonFiniteError", PyExc_ValueError);
    py::register_exception<OutOfDomainError>(m, "OutOfDomainError", PyExc_ValueError);
    py::register_exception<OnBoundaryError>(m, "OnBoundaryError", PyExc_ValueError);
    py::register_exception<DivergenceError>(m, "DivergenceError", PyExc_ArithmeticError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<Tristate>(m, "Tristate")
        .value("yes", Tristate::yes)
        .value("no", Tristate::no)
        .value("incomparable", Tristate::incomparable);

    py::class_<Hyperbolic>(m, "Hyperbolic")
        .def(py::init<>())
        .def(py::init<double, double>(), py::arg("a"), py::arg("b"))
        .def_static("from_components", &Hyperbolic::from_components, py::arg("s1"),
                    py::arg("s2"))
        .def_property_readonly("a", &Hyperbolic::a)
        .def_property_readonly("b", &Hyperbolic::b)
        .def_property_readonly("s1", &Hyperbolic::s1)
        .def_property_readonly("s2", &Hyperbolic::s2)
        .def("nonneg", &Hyperbolic::nonneg)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def(double() * py::self)
        .def(py::self * double())
        .def(py::self == py::self)
        .def("__repr__", [](const Hyperbolic& h) {
            std::ostringstream out;
            out << "Hyperbolic(a=" << h.a() << ", b=" << h.b() << ")";
            return out.str();
        });

    py::class_<Bicomplex>(m, "Bicomplex")
        .def(py::init<>())
        .def(py::init<double>(), py::arg("real"))
        .def(py::init<double, double, double, double>(), py::arg("x0"), py::arg("x1"),
             py::arg("x2"), py::arg("x3"))
        .def_static("from_z", &Bicomplex::from_z, py::arg("z1"), py::arg("z2"))
        .def_static("from_idempotent", &Bicomplex::from_idempotent, py::arg("beta1"),
                    py::arg("beta2"))
        .def_property_readonly("x0", &Bicomplex::x0)
        .def_property_readonly("x1", &Bicomplex::x1)
        .def_property_readonly("x2", &Bicomplex::x2)
        .def_property_readonly("x3", &Bicomplex::x3)
        .def_property_readonly("z1", &Bicomplex::z1)
        .def_property_readonly("z2", &Bicomplex::z2)
        .def_property_readonly("beta1", &Bicomplex::beta1)
        .def_property_readonly("beta2", &Bicomplex::beta2)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(-py::self)
        .def(py::self * py::self)
        .def(double() * py::self)
        .def(py::self * double())
        .def(py::self == py::self)
        .def("__repr__", [](const Bicomplex& Z) { return to_text(Z); });

    m.def("idempotent_e", &idempotent_e);
    m.def("idempotent_e_dagger", &idempotent_e_dagger);
    m.def("unit_i", &unit_i);
    m.def("unit_j", &unit_j);
    m.def("unit_k", &unit_k);
    m.def("to_idempotent", &to_idempotent, py::arg("Z"));
    m.def("invert", &invert, py::arg("Z"));
    m.def("conjugate_star", &conjugate_star, py::arg("Z"));
    m.def("exp_bc", &exp_bc, py::arg("Z"));
    m.def("exp_d", &exp_d, py::arg("h"));
    m.def("hyperbolic_norm", &hyperbolic_norm, py::arg("Z"));
    m.def("in_upper_half_plane", &in_upper_half_plane, py::arg("Z"));
    m.def("leq", &leq, py::arg("u"), py::arg("v"));
    m.def("to_text", &to_text, py::arg("Z"));
    m.def("parse_bicomplex", &parse_bicomplex, py::arg("text"));

    py::enum_<Scheme>(m, "Scheme")
        .value("trapezoid", Scheme::trapezoid)
        .value("gauss_legendre", Scheme::gauss_legendre);

    py::class_<DInterval>(m, "DInterval")
        .def(py::init([](double lo1, double hi1, double lo2, double hi2) {
                 return DInterval{lo1, hi1, lo2, hi2};
             }),
             py::arg("lo1"), py::arg("hi1"), py::arg("lo2"), py::arg("hi2"))
        .def_static("both", &DInterval::both, py::arg("lo"), py::arg("hi"))
        .def_static("real_line", &DInterval::real_line)
        .def_static("positive_line", &DInterval::positive_line)
        .def_readwrite("lo1", &DInterval::lo1)
        .def_readwrite("hi1", &DInterval::hi1)
        .def_readwrite("lo2", &DInterval::lo2)
        .def_readwrite("hi2", &DInterval::hi2);

    py::class_<ProductGrid>(m, "ProductGrid")
        .def(py::init<>())
        .def_readwrite("nodes1", &ProductGrid::nodes1)
        .def_readwrite("weights1", &ProductGrid::weights1)
        .def_readwrite("nodes2", &ProductGrid::nodes2)
        .def_readwrite("weights2", &ProductGrid::weights2)
        .def_readwrite("truncation", &ProductGrid::truncation);

    m.def("make_grid", &make_grid, py::arg("interval"), py::arg("n"),
          py::arg("scheme") = Scheme::gauss_legendre, py::arg("truncation") = 0.0);
    m.def("gauss_legendre_rule", &gauss_legendre_rule, py::arg("n"));

    py::class_<SampledProductFunction>(m, "SampledProductFunction")
        .def(py::init<>())
        .def_readwrite("grid", &SampledProductFunction::grid)
        .def_readwrite("values1", &SampledProductFunction::values1)
        .def_readwrite("values2", &SampledProductFunction::values2);

    m.def("sample",
          py::overload_cast<const ProductGrid&, const std::function<Cplx(double)>&,
                            const std::function<Cplx(double)>&>(&sample),
          py::arg("grid"), py::arg("f1"), py::arg("f2"));
    m.def("sample", py::overload_cast<const ProductGrid&, const std::function<Cplx(double)>&>(
                        &sample),
          py::arg("grid"), py::arg("f"));
    m.def("sample_density", &sample_density, py::arg("name"), py::arg("grid"));
    m.def("indicator_band_limit", &indicator_band_limit, py::arg("name"));
    m.def("d_integral", &d_integral, py::arg("F"));
    m.def("l2k_norm_squared", &l2k_norm_squared, py::arg("F"));

    py::class_<TransformConvention>(m, "TransformConvention")
        .def(py::init<>())
        .def(py::init([](double prefactor, int sign) {
                 return TransformConvention{prefactor, sign};
             }),
             py::arg("forward_prefactor"), py::arg("sign"))
        .def_readwrite("forward_prefactor", &TransformConvention::forward_prefactor)
        .def_readwrite("sign", &TransformConvention::sign)
        .def("inverse_prefactor", &TransformConvention::inverse_prefactor)
        .def("validate", &TransformConvention::validate);

    m.def("bicomplex_fourier", &bicomplex_fourier, py::arg("F"), py::arg("points"),
          py::arg("convention") = TransformConvention{});
    m.def("inverse_fourier", &inverse_fourier, py::arg("G"), py::arg("points"),
          py::arg("convention") = TransformConvention{});
    m.def("plancherel_check", &plancherel_check, py::arg("F"), py::arg("frequency_grid"),
          py::arg("convention") = TransformConvention{});

    py::class_<ProductFunction>(m, "ProductFunction")
        .def(py::init([](std::function<Cplx(Cplx)> f1, std::function<Cplx(Cplx)> f2) {
                 return ProductFunction{std::move(f1), std::move(f2)};
             }),
             py::arg("f1"), py::arg("f2"))
        .def("__call__", &ProductFunction::operator(), py::arg("Z"))
        .def_readwrite("f1", &ProductFunction::f1)
        .def_readwrite("f2", &ProductFunction::f2);

    py::class_<HalfPlaneDensity>(m, "HalfPlaneDensity")
        .def_readwrite("samples", &HalfPlaneDensity::samples);
    m.def("make_half_plane_density", &make_half_plane_density, py::arg("samples"));

    py::class_<BandDensity>(m, "BandDensity")
        .def_readwrite("samples", &BandDensity::samples)
        .def_readwrite("band_limit", &BandDensity::band_limit);
    m.def("make_band_density", &make_band_density, py::arg("samples"), py::arg("band_limit"));

    py::class_<HorizontalLine>(m, "HorizontalLine")
        .def_readwrite("x1", &HorizontalLine::x1)
        .def_readwrite("x2", &HorizontalLine::x2)
        .def("y1", &HorizontalLine::y1)
        .def("y2", &HorizontalLine::y2);
    m.def("make_line", &make_line, py::arg("x1"), py::arg("x2"));

    py::class_<ContourRect>(m, "ContourRect")
        .def(py::init([](double alpha, double y) {
                 return ContourRect{alpha, y};
             }),
             py::arg("alpha"), py::arg("y"))
        .def_readwrite("alpha", &ContourRect::alpha)
        .def_readwrite("y", &ContourRect::y);

    m.def("kernel_norm", &kernel_norm, py::arg("t"), py::arg("Z"));
    m.def("extend", &extend, py::arg("density"), py::arg("Z"));
    m.def("extension", &extension, py::arg("density"));
    m.def("horizontal_line_energy", &horizontal_line_energy, py::arg("F"), py::arg("line"),
          py::arg("x0_grid"));
    m.def("sup_energy", &sup_energy, py::arg("F"), py::arg("lines"), py::arg("x0_grid"));
    m.def("recover", &recover, py::arg("F"), py::arg("line"), py::arg("t_grid"),
          py::arg("x0_grid"));
    m.def("rectangle_contour_integral", &rectangle_contour_integral, py::arg("F"), py::arg("t"),
          py::arg("rect"), py::arg("nodes_per_edge") = 256);
    m.def("rectangle_contour_integral_conjugated", &rectangle_contour_integral_conjugated,
          py::arg("F"), py::arg("t"), py::arg("rect"), py::arg("nodes_per_edge") = 256);
    m.def("band_synthesize", &band_synthesize, py::arg("density"), py::arg("Z"));
    m.def("band_extension", &band_extension, py::arg("density"));
    m.def("exponential_type_constant", &exponential_type_constant, py::arg("density"));
    m.def("exponential_type_check", &exponential_type_check, py::arg("density"), py::arg("C"),
          py::arg("Z"));
    m.def("epsilon_damped_transform", &epsilon_damped_transform, py::arg("boundary"),
          py::arg("eps"), py::arg("t"));
    m.def("ray_transform", &ray_transform, py::arg("F"), py::arg("alpha"), py::arg("W"),
          py::arg("u_grid"));
    m.def("cauchy_integral", &cauchy_integral, py::arg("H"), py::arg("Z"));
    m.def("jump_identity", &jump_identity, py::arg("H"), py::arg("Z"), py::arg("F_ref"));

    py::class_<ReportRow>(m, "ReportRow")
        .def_readonly("test", &ReportRow::test)
        .def_readonly("parameter", &ReportRow::parameter)
        .def_readonly("component1", &ReportRow::component1)
        .def_readonly("component2", &ReportRow::component2)
        .def_readonly("bound", &ReportRow::bound)
        .def_readonly("passed", &ReportRow::pass);

    py::class_<VerifyOptions>(m, "VerifyOptions")
        .def(py::init<>())
        .def_readwrite("seed", &VerifyOptions::seed)
        .def_readwrite("tol", &VerifyOptions::tol)
        .def_readwrite("density", &VerifyOptions::density)
        .def_readwrite("density_csv", &VerifyOptions::density_csv)
        .def_readwrite("n", &VerifyOptions::n)
        .def_readwrite("T", &VerifyOptions::T);

    py::class_<SuiteResult>(m, "SuiteResult")
        .def_readonly("suite", &SuiteResult::suite)
        .def_readonly("rows", &SuiteResult::rows)
        .def_readonly("seconds", &SuiteResult::seconds)
        .def("passed", &SuiteResult::passed);

    m.def("suite_names", [] { return suite_names(); });
    m.def("run_suite", &run_suite, py::arg("name"), py::arg("options") = VerifyOptions{},
          py::call_guard<py::gil_scoped_release>());
}
