"""Structural invariants of Diophantine monoids.

Monoids of the form M = {x in N^(r-1) : sum a_i x_i = 0 mod a_r}, with
Apery sets, Hilbert bases, Elliott decompositions, class groups and the
carry-monoid presentation.  Thin wrapper over the C++ core.
"""

from ._core import (
    ApReduction,
    AperyTable,
    AxiomEntry,
    AxiomReport,
    CaleData,
    CanonicalCarrySpec,
    CarryElement,
    CarryMonoidSpec,
    CayleyTable,
    Decomposition,
    DiophError,
    ElliottRepresentation,
    ElliottScheme,
    EquationSpec,
    FiniteAbelianGroup,
    HilbertBasis,
    ProductIdentityReport,
    apery_box,
    apery_closed_form,
    bar_multiple,
    brute_apery,
    brute_group_structure,
    brute_minimal,
    cale_data,
    canonical_spec,
    carry,
    carry_add,
    carry_spec_from_json,
    carry_spec_to_json,
    check_axioms,
    class_group,
    contains,
    decompose,
    ell,
    ell_all,
    elliott_decompose,
    elliott_scheme,
    enumerate_solutions,
    group_from_quotient,
    hilbert_basis,
    inner_class_group,
    lambda_,
    lift,
    mod_inverse,
    normalize_equation,
    nu,
    oplus,
    phi,
    rays,
    reduce,
    smith_normal_form,
    two_dim_closed_form,
    verify_isomorphism,
    verify_product_identity,
)

__all__ = [
    "ApReduction",
    "AperyTable",
    "AxiomEntry",
    "AxiomReport",
    "CaleData",
    "CanonicalCarrySpec",
    "CarryElement",
    "CarryMonoidSpec",
    "CayleyTable",
    "Decomposition",
    "DiophError",
    "ElliottRepresentation",
    "ElliottScheme",
    "EquationSpec",
    "FiniteAbelianGroup",
    "HilbertBasis",
    "ProductIdentityReport",
    "apery_box",
    "apery_closed_form",
    "bar_multiple",
    "brute_apery",
    "brute_group_structure",
    "brute_minimal",
    "cale_data",
    "canonical_spec",
    "carry",
    "carry_add",
    "carry_spec_from_json",
    "carry_spec_to_json",
    "check_axioms",
    "class_group",
    "contains",
    "decompose",
    "ell",
    "ell_all",
    "elliott_decompose",
    "elliott_scheme",
    "enumerate_solutions",
    "group_from_quotient",
    "hilbert_basis",
    "inner_class_group",
    "lambda_",
    "lift",
    "mod_inverse",
    "normalize_equation",
    "nu",
    "oplus",
    "phi",
    "rays",
    "reduce",
    "smith_normal_form",
    "two_dim_closed_form",
    "verify_isomorphism",
    "verify_product_identity",
]

__version__ = "0.1.0"
