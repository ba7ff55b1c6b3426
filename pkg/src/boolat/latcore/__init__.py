"""Finite lattice engine: order, meet/join tables and lattice predicates."""
from .io import (
    lattice_from_dict,
    lattice_from_json,
    lattice_to_dict,
    lattice_to_dot,
    lattice_to_json,
)
from .lattice import (
    Decomposition,
    FiniteLattice,
    LatticeReport,
    boolean_cube,
    boolean_recursive,
    chain,
    cofactorial_decomposition,
    complements_of,
    distributive_bruteforce,
    dual,
    factorial_decomposition,
    find_isomorphism,
    goldie_dimension,
    interval,
    is_atomistic,
    is_boolean,
    is_coatomistic,
    is_cofactorial,
    is_distributive,
    is_factorial,
    is_isomorphic,
    join_irreducibles,
    jordan_holder,
    lattice_from_leq,
    lattice_report,
    length,
    meet_irreducibles,
    relative_complement,
    ucc_holds,
)

__all__ = [
    "FiniteLattice",
    "LatticeReport",
    "Decomposition",
    "lattice_from_leq",
    "chain",
    "boolean_cube",
    "is_distributive",
    "distributive_bruteforce",
    "complements_of",
    "is_boolean",
    "join_irreducibles",
    "meet_irreducibles",
    "factorial_decomposition",
    "cofactorial_decomposition",
    "is_factorial",
    "is_cofactorial",
    "is_atomistic",
    "is_coatomistic",
    "jordan_holder",
    "length",
    "ucc_holds",
    "goldie_dimension",
    "boolean_recursive",
    "interval",
    "relative_complement",
    "dual",
    "find_isomorphism",
    "is_isomorphic",
    "lattice_report",
    "lattice_to_dict",
    "lattice_from_dict",
    "lattice_to_json",
    "lattice_from_json",
    "lattice_to_dot",
]
