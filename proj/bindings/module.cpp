#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fptk/deuring.hpp"
#include "fptk/fpt.hpp"
#include "fptk/poly.hpp"
#include "fptk/scan.hpp"

namespace py = pybind11;
using namespace fptk;

namespace {

py::object to_fraction(const mpq_class& q) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(q.get_str());
}

py::dict form_class_to_dict(const fpt::FormClass& cls) {
    py::dict d;
    d["pattern"] = cls.pattern;
    d["cross_ratio"] = cls.cross_ratio ? py::cast(*cls.cross_ratio) : py::none();
    d["b"] = cls.b ? py::cast(*cls.b) : py::none();
    d["c"] = cls.c ? py::cast(*cls.c) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(fptk, m) {
    m.doc() = "F-pure thresholds of bivariate forms over finite fields";

    py::register_exception<PrimalityError>(m, "PrimalityError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<DivisionByZero>(m, "DivisionByZero", PyExc_ZeroDivisionError);
    py::register_exception<FieldMismatch>(m, "FieldMismatch", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_OverflowError);
    py::register_exception<ParityError>(m, "ParityError", PyExc_ValueError);

    py::class_<gf::FieldDesc, gf::FieldPtr>(m, "Field")
        .def_readonly("p", &gf::FieldDesc::p)
        .def_readonly("k", &gf::FieldDesc::k)
        .def_readonly("modulus", &gf::FieldDesc::modulus)
        .def("size", &gf::FieldDesc::size)
        .def("__repr__", [](const gf::FieldDesc& d) {
            return "Field(p=" + std::to_string(d.p) + ", k=" + std::to_string(d.k) + ")";
        });

    m.def("make_field", &gf::make_field, py::arg("p"), py::arg("k") = 1);
    m.def("is_prime", &gf::is_prime);

    py::class_<gf::FieldElement>(m, "FieldElement")
        .def(py::init<gf::FieldPtr, std::vector<int64_t>>())
        .def_static("from_int", &gf::FieldElement::from_int)
        .def_property_readonly("field", &gf::FieldElement::desc)
        .def_property_readonly("rep", &gf::FieldElement::rep)
        .def("is_zero", &gf::FieldElement::is_zero)
        .def("is_one", &gf::FieldElement::is_one)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("inv", &gf::FieldElement::inv)
        .def("pow", &gf::FieldElement::pow)
        .def("frobenius", &gf::FieldElement::frobenius)
        .def("__repr__", &gf::FieldElement::to_string)
        .def("__hash__", [](const gf::FieldElement& x) {
            size_t h = std::hash<int64_t>()(x.desc()->p);
            for (int64_t c : x.rep()) h = h * 1000003 + static_cast<size_t>(c);
            return h;
        });

    m.def("embed", &gf::embed);
    m.def("embed_ext", &gf::embed_ext);
    m.def("element_at", &gf::element_at);

    py::class_<poly::UniPoly>(m, "UniPoly")
        .def(py::init(&poly::UniPoly::from_ints))
        .def_static("from_elements",
                    [](gf::FieldPtr desc, std::vector<gf::FieldElement> coeffs) {
                        return poly::UniPoly(std::move(desc), std::move(coeffs));
                    })
        .def_property_readonly("field", &poly::UniPoly::desc)
        .def_property_readonly("coeffs", &poly::UniPoly::coeffs)
        .def("degree", &poly::UniPoly::degree)
        .def("is_zero", &poly::UniPoly::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("scaled", &poly::UniPoly::scaled)
        .def("derivative", &poly::UniPoly::derivative)
        .def("eval", &poly::UniPoly::eval)
        .def("divmod", &poly::UniPoly::divmod)
        .def("monic", &poly::UniPoly::monic)
        .def("lift", &poly::UniPoly::lift);

    m.def("gcd", &poly::gcd);
    m.def("uni_roots", &poly::uni_roots);

    py::class_<poly::ProjPoint>(m, "ProjPoint")
        .def(py::init<const gf::FieldElement&, const gf::FieldElement&>())
        .def_static("infinity", &poly::ProjPoint::infinity)
        .def_static("affine", &poly::ProjPoint::affine)
        .def_property_readonly("u", &poly::ProjPoint::u)
        .def_property_readonly("v", &poly::ProjPoint::v)
        .def("is_infinity", &poly::ProjPoint::is_infinity)
        .def(py::self == py::self)
        .def("__repr__", [](const poly::ProjPoint& z) {
            return "(" + z.u().to_string() + " : " + z.v().to_string() + ")";
        });

    py::class_<poly::BiForm>(m, "BiForm")
        .def(py::init(&poly::BiForm::from_ints))
        .def_property_readonly("field", &poly::BiForm::desc)
        .def_property_readonly("coeffs", &poly::BiForm::coeffs)
        .def("degree", &poly::BiForm::degree)
        .def("is_zero", &poly::BiForm::is_zero)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("pow", &poly::BiForm::pow)
        .def("scaled", &poly::BiForm::scaled)
        .def("swapped_vars", &poly::BiForm::swapped_vars)
        .def("dehomogenize", &poly::BiForm::dehomogenize);

    m.def("form_pow_reduced", &poly::form_pow_reduced);
    m.def("in_frobenius_ideal", &poly::in_frobenius_ideal);
    m.def("central_coeff", &poly::central_coeff);
    m.def("roots_on_p1", [](const poly::BiForm& f) {
        auto r = poly::roots_on_p1(f);
        return py::make_tuple(r.field, r.roots);
    });

    m.def("p_digits", &deuring::p_digits);
    m.def("binomial_row", &deuring::binomial_row);
    m.def("deuring_direct", &deuring::deuring_direct);
    m.def("deuring_eval", &deuring::deuring_eval);
    m.def("antiderivative_F", &deuring::antiderivative_F);
    m.def("legendre_poly", &deuring::legendre_poly);
    m.def("deuring_root_set", &deuring::deuring_root_set);
    m.def("mobius_orbit", &deuring::mobius_orbit);
    m.def("legendre_root_orbit", &deuring::legendre_root_orbit);

    m.def("cross_ratio", &fpt::cross_ratio);
    m.def("classify_form", [](const poly::BiForm& f) {
        return form_class_to_dict(fpt::classify_form(f));
    });
    m.def("ft_formula", [](const poly::BiForm& f) -> py::object {
        fpt::FormClass cls = fpt::classify_form(f);
        auto ft = fpt::ft_formula(cls, f.desc());
        if (!ft) return py::none();
        py::dict d;
        d["value"] = to_fraction(ft->value);
        d["provenance"] = fpt::to_string(ft->provenance);
        return d;
    });
    m.def("family_form", &fpt::family_form);
    m.def("nu", [](const poly::BiForm& f, int e) {
        auto rec = fpt::nu(f, e);
        py::dict d;
        d["e"] = rec.e;
        d["nu"] = rec.nu;
        d["ratio"] = to_fraction(rec.ratio);
        return d;
    });
    m.def("ft_bracket", [](const poly::BiForm& f, int e_max) {
        auto br = fpt::ft_bracket(f, e_max);
        py::list records;
        for (const auto& rec : br.records) {
            py::dict d;
            d["e"] = rec.e;
            d["nu"] = rec.nu;
            d["ratio"] = to_fraction(rec.ratio);
            records.append(d);
        }
        return py::make_tuple(records, to_fraction(br.lower), to_fraction(br.upper));
    });
    m.def("lct_value", [](const poly::BiForm& f) -> py::object {
        auto lct = fpt::lct_value(fpt::classify_form(f));
        return lct ? to_fraction(*lct) : py::none();
    });

    py::class_<scan::ScanRecord>(m, "ScanRecord")
        .def_readonly("p", &scan::ScanRecord::p)
        .def_readonly("admissible", &scan::ScanRecord::admissible)
        .def_readonly("n", &scan::ScanRecord::n)
        .def_readonly("h_zero", &scan::ScanRecord::h_zero)
        .def_readonly("in_p", &scan::ScanRecord::in_p)
        .def_readonly("ss_check", &scan::ScanRecord::ss_check)
        .def_readonly("reason", &scan::ScanRecord::reason);

    m.def("sieve_primes", &scan::sieve_primes);
    m.def(
        "scan_primes",
        [](int b, int c, int64_t a_num, int64_t a_den, int64_t bound, bool ss_check) {
            scan::ScanQuery q{b, c, a_num, a_den, bound, ss_check};
            return scan::scan_primes(q);
        },
        py::arg("b"), py::arg("c"), py::arg("a_num"), py::arg("a_den") = 1,
        py::arg("max_prime") = 100, py::arg("ss_check") = false);
    m.def("count_points_legendre_curve", &scan::count_points_legendre_curve);
    m.def("is_supersingular", &scan::is_supersingular);
    m.def("report", [](const std::vector<scan::ScanRecord>& records, const std::string& fmt) {
        return scan::report(records, fmt == "json" ? scan::ReportFormat::Json
                                                   : scan::ReportFormat::Csv);
    });
}
