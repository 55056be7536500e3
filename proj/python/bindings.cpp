// Pybind11 bindings for the sierpcalc core: digit expansions, the bijection
// onto the double-covered Sierpinski set, its arithmetic, pullback calculus
// and Fourier analysis.

#include "sierp/arithmetic.hpp"
#include "sierp/calculus.hpp"
#include "sierp/digits.hpp"
#include "sierp/errors.hpp"
#include "sierp/fourier.hpp"
#include "sierp/pullbacks.hpp"
#include "sierp/sierpinski.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace sierp;

namespace {

Rational to_rational(py::handle obj) {
    if (py::isinstance<Rational>(obj)) return obj.cast<Rational>();
    if (py::isinstance<py::int_>(obj)) return Rational::parse(py::str(obj).cast<std::string>());
    if (py::isinstance<py::str>(obj)) return Rational::parse(obj.cast<std::string>());
    // fractions.Fraction and anything else with numerator/denominator
    if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
        const std::string n = py::str(obj.attr("numerator")).cast<std::string>();
        const std::string d = py::str(obj.attr("denominator")).cast<std::string>();
        return Rational::parse(n + "/" + d);
    }
    throw py::type_error("expected int, str, Fraction, or Rational");
}

py::object to_fraction(const Rational& r) {
    static py::object fraction_type = py::module_::import("fractions").attr("Fraction");
    return fraction_type(py::str(r.num().get_str()), py::str(r.den().get_str()));
}

Side side_from_string(const std::string& s) {
    if (s == "+" || s == "plus") return Side::plus;
    if (s == "-" || s == "minus") return Side::minus;
    if (s == "0" || s == "neutral") return Side::neutral;
    throw py::value_error("side must be one of '+', '-', '0'");
}

} // namespace

PYBIND11_MODULE(_sierpcalc, m) {
    m.doc() = "exact calculus on a double-covered Sierpinski set";

    py::register_exception<NotInSet>(m, "NotInSet");
    py::register_exception<InconsistentSide>(m, "InconsistentSide");
    py::register_exception<DigitOutOfRange>(m, "DigitOutOfRange");
    py::register_exception<ForbiddenPair>(m, "ForbiddenPair");
    py::register_exception<DivisionByZeroPrime>(m, "DivisionByZeroPrime");
    py::register_exception<ToleranceNotMet>(m, "ToleranceNotMet");
    py::register_exception<NotDifferentiable>(m, "NotDifferentiable");

    py::class_<Rational>(m, "Rational")
        .def(py::init([](py::handle v) { return to_rational(v); }))
        .def(py::init([](py::handle n, py::handle d) { return to_rational(n) / to_rational(d); }))
        .def("__str__", &Rational::str)
        .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
        .def("__float__", &Rational::to_double)
        .def("__eq__", [](const Rational& a, py::handle b) { return a == to_rational(b); })
        .def("__lt__", [](const Rational& a, py::handle b) { return a < to_rational(b); })
        .def("__neg__", [](const Rational& a) { return -a; })
        .def("__add__", [](const Rational& a, py::handle b) { return a + to_rational(b); })
        .def("__sub__", [](const Rational& a, py::handle b) { return a - to_rational(b); })
        .def("__mul__", [](const Rational& a, py::handle b) { return a * to_rational(b); })
        .def("__truediv__", [](const Rational& a, py::handle b) { return a / to_rational(b); })
        .def("as_fraction", &to_fraction);
    py::implicitly_convertible<py::int_, Rational>();
    py::implicitly_convertible<py::str, Rational>();

    py::class_<PeriodicDigits>(m, "PeriodicDigits")
        .def_readonly("sign", &PeriodicDigits::sign)
        .def_readonly("radix", &PeriodicDigits::radix)
        .def_readonly("int_digits", &PeriodicDigits::int_digits)
        .def_readonly("pre_frac", &PeriodicDigits::pre_frac)
        .def_readonly("period", &PeriodicDigits::period)
        .def("__str__", &PeriodicDigits::str)
        .def("__repr__", [](const PeriodicDigits& d) { return "PeriodicDigits('" + d.str() + "')"; })
        .def("__eq__", [](const PeriodicDigits& a, const PeriodicDigits& b) { return a == b; })
        .def_static("parse", &PeriodicDigits::parse);

    m.def("expand", [](py::handle x, int radix) { return expand(to_rational(x), radix); }, py::arg("x"),
          py::arg("radix") = 3);
    m.def("evaluate", [](const PeriodicDigits& d) { return to_fraction(evaluate(d)); });
    m.def("truncate", [](const PeriodicDigits& d, int n) { return to_fraction(truncate(d, n)); });
    m.def("rebase_tag", &rebase_tag, py::arg("d"), py::arg("new_radix") = 4);
    m.def("split_binary", &split_binary);
    m.def("merge_binary", &merge_binary);
    m.def("align_digits", [](const PeriodicDigits& a, const PeriodicDigits& b) { return align(a, b); });
    m.def("normalize", &normalize);

    py::enum_<Side>(m, "Side")
        .value("plus", Side::plus)
        .value("minus", Side::minus)
        .value("neutral", Side::neutral);

    py::class_<SierpinskiPoint>(m, "SierpinskiPoint")
        .def(py::init([](py::handle a, py::handle b, const std::string& side) {
                 return SierpinskiPoint(to_rational(a), to_rational(b), side_from_string(side));
             }),
             py::arg("a"), py::arg("b"), py::arg("side") = "0")
        .def_property_readonly("a", [](const SierpinskiPoint& p) { return to_fraction(p.a()); })
        .def_property_readonly("b", [](const SierpinskiPoint& p) { return to_fraction(p.b()); })
        .def_property_readonly("side", [](const SierpinskiPoint& p) { return std::string(1, side_char(p.side())); })
        .def("__str__", &SierpinskiPoint::str)
        .def("__repr__", [](const SierpinskiPoint& p) { return "SierpinskiPoint('" + p.str() + "')"; })
        .def("__eq__", [](const SierpinskiPoint& a, const SierpinskiPoint& b) { return a == b; })
        .def("__neg__", [](const SierpinskiPoint& p) { return -p; })
        .def_static("parse", &SierpinskiPoint::parse);

    m.def("forward", [](py::handle x) { return forward(to_rational(x)); });
    m.def("inverse", [](const SierpinskiPoint& p) { return to_fraction(inverse(p)); });
    m.def("classify_side", [](py::handle a, py::handle b) {
        switch (classify_side(to_rational(a), to_rational(b))) {
            case PairClass::case_A: return "A";
            case PairClass::case_B: return "B";
            case PairClass::case_C: return "C";
            default: return "not_in_S";
        }
    });
    m.def("sample_cells",
          [](py::handle lo, py::handle hi, int k) { return sample_cells(to_rational(lo), to_rational(hi), k); },
          py::arg("lo"), py::arg("hi"), py::arg("k"));

    // arithmetic on S
    auto S = []() -> const BijectionContext<SierpinskiPoint>& { return sierpinski_context(); };
    m.def("oplus", [S](const SierpinskiPoint& x, const SierpinskiPoint& y) { return oplus(S(), x, y); });
    m.def("ominus", [S](const SierpinskiPoint& x, const SierpinskiPoint& y) { return ominus(S(), x, y); });
    m.def("odot", [S](const SierpinskiPoint& x, const SierpinskiPoint& y) { return odot(S(), x, y); });
    m.def("oslash", [S](const SierpinskiPoint& x, const SierpinskiPoint& y) { return oslash(S(), x, y); });
    m.def("embed_natural", [S](long n) { return embed_natural(S(), n); });
    m.def("power", [S](const SierpinskiPoint& x, long n) { return power(S(), x, n); });

    // pullback calculus: polynomials exactly, black-box callables numerically
    py::class_<Polynomial>(m, "Polynomial")
        .def_static("parse", &Polynomial::parse)
        .def("__str__", &Polynomial::str)
        .def("__call__", [](const Polynomial& p, py::handle t) { return to_fraction(p(to_rational(t))); });

    m.def("derivative",
          [](const std::string& poly, const SierpinskiPoint& x) {
              return derivative(polynomial_on_S(Polynomial::parse(poly)), x);
          },
          py::arg("polynomial"), py::arg("x"));
    m.def("laplacian",
          [](const std::string& poly, const SierpinskiPoint& x) {
              return laplacian(polynomial_on_S(Polynomial::parse(poly)), x);
          },
          py::arg("polynomial"), py::arg("x"));
    m.def("derivative_numeric",
          [](const std::function<double(double)>& a, const SierpinskiPoint& x, double h0) {
              PullbackSR F;
              F.ctx_x = sierpinski_context();
              F.ctx_y = real_context();
              F.value = a;
              return to_fraction(derivative(F, x, DerivMode::numeric, h0));
          },
          py::arg("pullback"), py::arg("x"), py::arg("h0") = 0.1);
    m.def("integrate_poly",
          [](const std::string& poly, const SierpinskiPoint& lo, const SierpinskiPoint& hi) {
              return to_fraction(integrate(polynomial_S_to_R(Polynomial::parse(poly)), lo, hi, IntMode::exact));
          },
          py::arg("polynomial"), py::arg("lo"), py::arg("hi"));
    m.def("integrate_step",
          [](const SierpinskiPoint& lo, const SierpinskiPoint& hi, double tol) {
              return integrate(step_pullback(), lo, hi, IntMode::quadrature, tol).to_double();
          },
          py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-8);

    // Fourier analysis of the step example (and custom piecewise specs)
    py::class_<FourierSeries>(m, "FourierSeries")
        .def_readonly("n_terms", &FourierSeries::n_terms)
        .def_readonly("cos_coeffs", &FourierSeries::cos_coeffs)
        .def_readonly("sin_coeffs", &FourierSeries::sin_coeffs);

    m.def("basis_c", &basis_c);
    m.def("basis_s", &basis_s);
    m.def("analyze_step",
          [](int n_terms, double tol) { return analyze(step_pullback(), n_terms, forward(Rational(1)), {}, tol); },
          py::arg("n_terms"), py::arg("tol") = 1e-8);
    m.def("analyze_piecewise",
          [](const std::string& spec, int n_terms, double tol) {
              return analyze(piecewise_S_to_R(PiecewiseConstant::parse(spec)), n_terms, forward(Rational(1)), {}, tol);
          },
          py::arg("spec"), py::arg("n_terms"), py::arg("tol") = 1e-8);
    m.def("reconstruct", [](const FourierSeries& s, const SierpinskiPoint& x) { return reconstruct(s, x); });
    m.def("reconstruct_at", &reconstruct_at);
}
