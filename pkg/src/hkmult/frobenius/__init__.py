"""Exact Frobenius colengths over prime fields."""
from .engines import (
    Limits,
    QuotientBasis,
    colength_general,
    colength_quadric,
    find_grading,
    is_power_of,
    principal_colength,
    truncated_colength,
)
from .estimate import ColengthSequence, colength, fit_leading, hk_estimate
from .monomial import (
    MonomialIdeal,
    frobenius_power,
    ideal_product,
    monomial_colength,
    ordinary_power,
    ordinary_power_colength,
    staircase_enumeration,
    standard_monomials,
)
from .poly import FpPoly, Monomial, discover_variables, parse_poly
from .spec import RingKind, RingSpec, parse_ring_spec

__all__ = [
    "ColengthSequence",
    "FpPoly",
    "Limits",
    "Monomial",
    "MonomialIdeal",
    "QuotientBasis",
    "RingKind",
    "RingSpec",
    "colength",
    "colength_general",
    "colength_quadric",
    "discover_variables",
    "find_grading",
    "fit_leading",
    "frobenius_power",
    "hk_estimate",
    "ideal_product",
    "is_power_of",
    "monomial_colength",
    "ordinary_power",
    "ordinary_power_colength",
    "parse_poly",
    "parse_ring_spec",
    "principal_colength",
    "staircase_enumeration",
    "standard_monomials",
    "truncated_colength",
]
