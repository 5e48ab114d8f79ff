#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dioph/apery.hpp"
#include "dioph/carry_monoid.hpp"
#include "dioph/class_groups.hpp"
#include "dioph/decompose.hpp"
#include "dioph/equation.hpp"
#include "dioph/error.hpp"
#include "dioph/hilbert.hpp"
#include "dioph/oracle.hpp"
#include "dioph/smith.hpp"

namespace py = pybind11;

namespace {

py::object to_fraction(const dioph::Rational& r) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(r.num, r.den);
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Apery sets, Hilbert bases and class groups of Diophantine monoids";

    py::register_exception<dioph::Error>(m, "DiophError");

    py::class_<dioph::EquationSpec>(m, "EquationSpec")
        .def_readonly("raw", &dioph::EquationSpec::raw)
        .def_readonly("coeffs", &dioph::EquationSpec::coeffs)
        .def_readonly("modulus", &dioph::EquationSpec::modulus)
        .def_readonly("gcds", &dioph::EquationSpec::gcds)
        .def_readonly("widths", &dioph::EquationSpec::widths)
        .def_property_readonly("dim", &dioph::EquationSpec::dim)
        .def_property_readonly("r", &dioph::EquationSpec::r)
        .def("__eq__", [](const dioph::EquationSpec& a, const dioph::EquationSpec& b) {
            return a == b;
        });

    m.def("normalize_equation", &dioph::normalize_equation, py::arg("raw"));
    m.def("contains", &dioph::contains, py::arg("eq"), py::arg("x"));
    m.def("rays", &dioph::rays, py::arg("eq"));
    m.def("lift", &dioph::lift, py::arg("eq"), py::arg("x"));
    m.def(
        "lambda_",
        [](const dioph::EquationSpec& eq, int i, const dioph::LatticePoint& x) {
            return to_fraction(dioph::cale_lambda(eq, i, x));
        },
        py::arg("eq"), py::arg("ray_index"), py::arg("x"),
        "fractional coordinate of x along a ray, as a Fraction");
    m.def(
        "nu",
        [](const dioph::EquationSpec& eq, const dioph::LatticePoint& x) {
            return to_fraction(dioph::nu(eq, x));
        },
        py::arg("eq"), py::arg("x"));

    py::class_<dioph::CaleData>(m, "CaleData")
        .def_readonly("n", &dioph::CaleData::n)
        .def_readonly("ray_coords", &dioph::CaleData::ray_coords);
    m.def("cale_data", &dioph::cale_data, py::arg("eq"), py::arg("x"));
    m.def("ell", &dioph::ell, py::arg("eq"), py::arg("ray_index"),
          py::arg("guard") = dioph::kDefaultGuard);
    m.def("ell_all",
          py::overload_cast<const dioph::EquationSpec&, dioph::i64>(&dioph::ell_all),
          py::arg("eq"), py::arg("guard") = dioph::kDefaultGuard);

    py::class_<dioph::AperyTable>(m, "AperyTable")
        .def_readonly("spec", &dioph::AperyTable::spec)
        .def_readonly("elements", &dioph::AperyTable::elements)
        .def("__len__", &dioph::AperyTable::size)
        .def("index_of", [](const dioph::AperyTable& t, const dioph::LatticePoint& x)
                            -> std::optional<size_t> { return t.index_of(x); });
    m.def("apery_box", &dioph::apery_box, py::arg("eq"), py::arg("guard") = dioph::kDefaultGuard);
    m.def("apery_closed_form", &dioph::apery_closed_form, py::arg("eq"),
          py::arg("guard") = dioph::kDefaultGuard);

    py::class_<dioph::ApReduction>(m, "ApReduction")
        .def_readonly("apery", &dioph::ApReduction::apery)
        .def_readonly("carries", &dioph::ApReduction::carries);
    m.def("reduce", &dioph::reduce, py::arg("table"), py::arg("x"));
    m.def("oplus", &dioph::oplus, py::arg("table"), py::arg("a"), py::arg("b"));
    m.def("carry", &dioph::carry, py::arg("table"), py::arg("a"), py::arg("b"));
    m.def("bar_multiple", &dioph::bar_multiple, py::arg("table"), py::arg("n"), py::arg("a"));

    py::class_<dioph::HilbertBasis>(m, "HilbertBasis")
        .def_readonly("spec", &dioph::HilbertBasis::spec)
        .def_readonly("rays", &dioph::HilbertBasis::rays)
        .def_readonly("extras", &dioph::HilbertBasis::extras)
        .def("all", &dioph::HilbertBasis::all)
        .def("__len__", &dioph::HilbertBasis::size);
    m.def("hilbert_basis", &dioph::hilbert_basis, py::arg("eq"),
          py::arg("guard") = dioph::kDefaultGuard);

    py::class_<dioph::Decomposition>(m, "Decomposition")
        .def_readonly("apery_part", &dioph::Decomposition::apery_part)
        .def_readonly("ray_mults", &dioph::Decomposition::ray_mults);
    m.def("decompose", &dioph::decompose, py::arg("eq"), py::arg("x"));

    py::class_<dioph::ElliottScheme>(m, "ElliottScheme")
        .def_readonly("spec", &dioph::ElliottScheme::spec)
        .def_readonly("u", &dioph::ElliottScheme::u)
        .def_readonly("v", &dioph::ElliottScheme::v)
        .def_readonly("admissible", &dioph::ElliottScheme::admissible);
    m.def("elliott_scheme", &dioph::elliott_scheme, py::arg("eq"),
          py::arg("guard") = dioph::kDefaultGuard);

    py::class_<dioph::ElliottRepresentation>(m, "ElliottRepresentation")
        .def_readonly("ray_mults", &dioph::ElliottRepresentation::ray_mults)
        .def_readonly("m", &dioph::ElliottRepresentation::m)
        .def_readonly("n", &dioph::ElliottRepresentation::n);
    m.def("elliott_decompose", &dioph::elliott_decompose, py::arg("scheme"), py::arg("x"));

    py::class_<dioph::FiniteAbelianGroup>(m, "FiniteAbelianGroup")
        .def_readonly("invariant_factors", &dioph::FiniteAbelianGroup::invariant_factors)
        .def("order", &dioph::FiniteAbelianGroup::order)
        .def("exponent", &dioph::FiniteAbelianGroup::exponent)
        .def("is_trivial", &dioph::FiniteAbelianGroup::is_trivial)
        .def("__repr__", &dioph::FiniteAbelianGroup::to_string)
        .def("__eq__", [](const dioph::FiniteAbelianGroup& a,
                          const dioph::FiniteAbelianGroup& b) { return a == b; });

    m.def("mod_inverse", &dioph::mod_inverse, py::arg("a"), py::arg("m"));
    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<dioph::i64>>& rows) {
            return dioph::smith_normal_form(dioph::IntMatrix::from_rows(rows));
        },
        py::arg("rows"));
    m.def("group_from_quotient", &dioph::group_from_quotient, py::arg("ambient_rank"),
          py::arg("gens"));

    m.def("phi", &dioph::phi, py::arg("eq"), py::arg("ells"), py::arg("x"));
    m.def("class_group", &dioph::class_group, py::arg("eq"),
          py::arg("guard") = dioph::kDefaultGuard);
    m.def("inner_class_group", &dioph::inner_class_group, py::arg("eq"),
          py::arg("guard") = dioph::kDefaultGuard);

    py::class_<dioph::ProductIdentityReport>(m, "ProductIdentityReport")
        .def_readonly("lhs", &dioph::ProductIdentityReport::lhs)
        .def_readonly("rhs", &dioph::ProductIdentityReport::rhs)
        .def_readonly("holds", &dioph::ProductIdentityReport::holds);
    m.def("verify_product_identity", &dioph::verify_product_identity, py::arg("eq"),
          py::arg("guard") = dioph::kDefaultGuard);
    m.def("two_dim_closed_form", &dioph::two_dim_closed_form, py::arg("a"), py::arg("b"),
          py::arg("c"));

    py::class_<dioph::CarryMonoidSpec>(m, "CarryMonoidSpec")
        .def_readonly("group", &dioph::CarryMonoidSpec::group)
        .def_readonly("ray_count", &dioph::CarryMonoidSpec::ray_count)
        .def("order", &dioph::CarryMonoidSpec::order)
        .def("element_at", &dioph::CarryMonoidSpec::element_at)
        .def("index_of", &dioph::CarryMonoidSpec::index_of)
        .def("carry_at", &dioph::CarryMonoidSpec::carry_at)
        .def("__eq__", [](const dioph::CarryMonoidSpec& a, const dioph::CarryMonoidSpec& b) {
            return a == b;
        });

    py::class_<dioph::CarryElement>(m, "CarryElement")
        .def(py::init([](std::vector<dioph::i64> g, std::vector<dioph::i64> f) {
                 return dioph::CarryElement{std::move(g), std::move(f)};
             }),
             py::arg("g"), py::arg("f"))
        .def_readonly("g", &dioph::CarryElement::g)
        .def_readonly("f", &dioph::CarryElement::f)
        .def("__eq__", [](const dioph::CarryElement& a, const dioph::CarryElement& b) {
            return a == b;
        });
    m.def("carry_add", &dioph::carry_add, py::arg("spec"), py::arg("x"), py::arg("y"));

    py::class_<dioph::AxiomReport::Entry>(m, "AxiomEntry")
        .def_readonly("axiom", &dioph::AxiomReport::Entry::axiom)
        .def_readonly("passed", &dioph::AxiomReport::Entry::passed)
        .def_readonly("counterexample", &dioph::AxiomReport::Entry::counterexample);
    py::class_<dioph::AxiomReport>(m, "AxiomReport")
        .def_readonly("entries", &dioph::AxiomReport::entries)
        .def("all_passed", &dioph::AxiomReport::all_passed);
    m.def("check_axioms", &dioph::check_axioms, py::arg("spec"), py::arg("depth_bound"),
          py::arg("coord_bound"));

    py::class_<dioph::CanonicalCarrySpec>(m, "CanonicalCarrySpec")
        .def_readonly("spec", &dioph::CanonicalCarrySpec::spec)
        .def_readonly("apery_by_index", &dioph::CanonicalCarrySpec::apery_by_index);
    m.def("canonical_spec", &dioph::canonical_spec, py::arg("eq"),
          py::arg("guard") = dioph::kDefaultGuard);
    m.def("verify_isomorphism", &dioph::verify_isomorphism, py::arg("eq"), py::arg("canonical"),
          py::arg("coord_bound"), py::arg("guard") = dioph::kDefaultGuard);
    m.def("carry_spec_to_json", &dioph::carry_spec_to_json, py::arg("spec"),
          py::arg("indent") = -1);
    m.def("carry_spec_from_json", &dioph::carry_spec_from_json, py::arg("text"));

    m.def("enumerate_solutions", &dioph::enumerate_solutions, py::arg("eq"), py::arg("upper"),
          py::arg("guard") = dioph::kDefaultGuard);
    m.def("brute_apery", &dioph::brute_apery, py::arg("eq"),
          py::arg("guard") = dioph::kDefaultGuard);
    m.def("brute_minimal", &dioph::brute_minimal, py::arg("points"));

    py::class_<dioph::CayleyTable>(m, "CayleyTable")
        .def(py::init([](size_t n, size_t identity, std::vector<size_t> op) {
                 return dioph::CayleyTable{n, identity, std::move(op)};
             }),
             py::arg("n"), py::arg("identity"), py::arg("op"))
        .def_readonly("n", &dioph::CayleyTable::n)
        .def_readonly("identity", &dioph::CayleyTable::identity)
        .def_readonly("op", &dioph::CayleyTable::op);
    m.def("brute_group_structure", &dioph::brute_group_structure, py::arg("table"));
}
