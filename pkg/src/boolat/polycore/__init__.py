"""Exact polynomial arithmetic over Q and F_p, with factorization."""
from .factor import (
    factor_mod_p,
    factor_q,
    hensel_lift,
    is_irreducible_q,
    poly_gcd_q,
    resultant,
    squarefree_decomposition,
    squarefree_part,
    sylvester_matrix,
    sylvester_resultant,
)
from .parse import parse_poly, poly_from_json, poly_to_json
from .poly import PolyFp, PolyQ

__all__ = [
    "PolyQ",
    "PolyFp",
    "poly_gcd_q",
    "squarefree_part",
    "squarefree_decomposition",
    "factor_mod_p",
    "hensel_lift",
    "factor_q",
    "is_irreducible_q",
    "resultant",
    "sylvester_matrix",
    "sylvester_resultant",
    "parse_poly",
    "poly_to_json",
    "poly_from_json",
]
