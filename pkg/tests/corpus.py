"""Shared lattice corpus for property and acceptance tests.

Built lazily and cached per test session: divisor lattices, subgroup lattices,
subfield lattices of fixture fields, and seeded random lattices.
"""
from __future__ import annotations

import random
from functools import lru_cache

from boolat import grouplat, numfield
from boolat.errors import NotALattice
from boolat.latcore import boolean_cube, chain, lattice_from_leq
from boolat.polycore import parse_poly

RANDOM_SEED = 1729

FIELD_FIXTURES = [
    "X^2 - 2",
    "X^3 - 2",
    "X^4 - 2",
    "X^4 - 10*X^2 + 1",
    "X^6 - 2",
    "X^6 + X^5 + X^4 + X^3 + X^2 + X + 1",
    "X^4 + 1",
    "X^3 - 3*X + 1",
    "X^5 - 2",
    "X^6 + X^3 + 1",
    "X^6 + 3",
    "X^6 - 3*X^2 - 1",
    "X^4 + X + 1",
    "X^8 + 1",
    "X^8 - 2",
    "X^8 - X^7 + X^5 - X^4 + X^3 - X + 1",
]


def m3():
    return lattice_from_leq(["0", "a", "b", "c", "1"], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def n5():
    return lattice_from_leq(["0", "a", "b", "c", "1"], [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


def cofactorial_not_boolean():
    """Seven elements: every element is uniquely an irredundant meet of co-atoms, yet not distributive."""
    return lattice_from_leq(
        ["0", "a", "b", "p", "q", "r", "1"],
        [(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (2, 5), (3, 6), (4, 6), (5, 6)],
    )


@lru_cache(maxsize=None)
def field_lattices():
    out = []
    for text in FIELD_FIXTURES:
        L = numfield.nf_create(parse_poly(text))
        out.append((text, numfield.subfield_lattice(L)))
    return tuple(out)


def groups(max_order: int = 48):
    C, X = grouplat.cyclic, grouplat.direct_product
    gs = [C(n) for n in range(1, max_order + 1)]
    for a in range(2, max_order + 1):
        for b in range(a, max_order // a + 1):
            gs.append(X(C(a), C(b)))
    gs += [
        X(X(C(2), C(2)), C(2)),
        X(X(X(C(2), C(2)), C(2)), C(2)),
        X(X(C(2), C(2)), C(3)),
        X(X(C(2), C(2)), C(6)),
        X(X(C(2), C(2)), C(10)),
        X(X(C(3), C(3)), C(3)),
        X(X(C(2), C(4)), C(2)),
        X(X(C(2), C(4)), C(4)),
        grouplat.quaternion(),
        X(grouplat.quaternion(), C(2)),
        X(grouplat.quaternion(), C(3)),
        grouplat.symmetric(4),
        X(grouplat.symmetric(4), C(2)),
        grouplat.from_permutations([[1, 2, 0, 3], [1, 0, 3, 2]], name="A4"),
        X(grouplat.dihedral(3), C(3)),
        X(grouplat.dihedral(3), grouplat.dihedral(3)),
        X(grouplat.dihedral(4), C(2)),
    ]
    gs += [grouplat.dihedral(n) for n in range(3, max_order // 2 + 1)]
    return [g for g in gs if g.order <= max_order]


@lru_cache(maxsize=None)
def subgroup_lattices():
    return tuple((repr(G), grouplat.subgroup_lattice(G).lattice) for G in groups())


@lru_cache(maxsize=None)
def divisor_lattices(limit: int = 200):
    return tuple((f"div({n})", grouplat.divisor_lattice(n)) for n in range(1, limit + 1))


@lru_cache(maxsize=None)
def random_lattices(count: int = 400):
    """Random posets on at most 6 inner elements plus a bottom and a top, kept when they are lattices."""
    rng = random.Random(RANDOM_SEED)
    out = []
    for trial in range(count):
        k = rng.randint(0, 6)
        density = rng.choice([0.2, 0.35, 0.5])
        pairs = [(i, j) for i in range(1, k + 1) for j in range(i + 1, k + 1) if rng.random() < density]
        pairs += [(0, i) for i in range(1, k + 2)] + [(i, k + 1) for i in range(k + 1)]
        labels = ["0"] + [f"e{i}" for i in range(1, k + 1)] + ["1"]
        try:
            out.append((f"random#{trial}", lattice_from_leq(labels, pairs)))
        except NotALattice:
            continue
    return tuple(out)


@lru_cache(maxsize=None)
def small_named():
    return (
        ("point", chain(1)),
        ("edge", chain(2)),
        ("chain3", chain(3)),
        ("chain4", chain(4)),
        ("square", boolean_cube(2)),
        ("cube3", boolean_cube(3)),
        ("cube4", boolean_cube(4)),
        ("cube5", boolean_cube(5)),
        ("M3", m3()),
        ("N5", n5()),
    )


def full_corpus():
    return (small_named() + divisor_lattices() + subgroup_lattices()
            + tuple((t, lat.lattice) for t, lat in field_lattices()) + random_lattices())
