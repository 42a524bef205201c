"""Exact enumeration of additive codes over Z2^alpha x Z8^beta by type.

The package computes the number of distinct additive codes of a given type
(alpha, beta; k0, k1, k2, k3) -- the Mixed Generalized Gaussian Numbers --
together with the Z8, Z2Z4 and binary specializations, and validates the
formulas against an exhaustive subgroup-enumeration oracle at desk scale.
"""

from .counting import (
    CountBreakdown,
    DeltaExponents,
    IdentityReport,
    TypeProfile,
    binary_binomial_identity,
    check_identities,
    count,
    count_closed_form,
    count_dual,
    count_product,
    count_z2z4,
    count_z8,
    delta_exponents,
    dual_type,
    lemma_swap_k_l,
    self_dual_count_condition,
)
from .census import TypeCensus, census, enumerate_subgroups, formula_census, verify_formula
from .codes import (
    Code,
    MixedWord,
    ParityCheckMatrix,
    StandardFormMatrix,
    assemble,
    classify_type,
    dual_bruteforce,
    inner_product,
    parity_check,
    phi_reduce,
    random_standard_form,
    span,
)
from .errors import AmbientTooLargeError, NotASubgroupError, SelfCheckError
from .qnum import q_binomial, q_factorial, q_integer, q_multinomial

__version__ = "0.1.0"

__all__ = [
    "TypeProfile",
    "CountBreakdown",
    "DeltaExponents",
    "IdentityReport",
    "count",
    "count_product",
    "count_closed_form",
    "count_z8",
    "count_z2z4",
    "binary_binomial_identity",
    "delta_exponents",
    "dual_type",
    "count_dual",
    "self_dual_count_condition",
    "lemma_swap_k_l",
    "check_identities",
    "q_integer",
    "q_factorial",
    "q_binomial",
    "q_multinomial",
    "MixedWord",
    "Code",
    "StandardFormMatrix",
    "ParityCheckMatrix",
    "inner_product",
    "assemble",
    "span",
    "classify_type",
    "parity_check",
    "dual_bruteforce",
    "phi_reduce",
    "random_standard_form",
    "TypeCensus",
    "census",
    "formula_census",
    "enumerate_subgroups",
    "verify_formula",
    "SelfCheckError",
    "NotASubgroupError",
    "AmbientTooLargeError",
]
