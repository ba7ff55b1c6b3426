"""Finite groups by Cayley table and their subgroup lattices.

Subgroups are bitmasks over element indices. The lattice is found by a
fixed-point closure: start from the cyclic subgroups and keep joining with
cyclic subgroups until nothing new appears.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .errors import InternalDisagreement, NotAGroup, OrderTooLarge, ParseError
from .latcore import (
    FiniteLattice,
    is_boolean,
    is_distributive,
    lattice_from_leq,
    length,
)

MAX_ORDER = 64


def _bits(mask: int) -> list[int]:
    return [i for i in range(mask.bit_length()) if mask >> i & 1]


class FiniteGroup:
    """Group on {0..n-1} with multiplication table `table[a][b] = a*b`."""

    def __init__(self, table: Sequence[Sequence[int]], name: str = ""):
        n = len(table)
        if n == 0:
            raise NotAGroup("empty table")
        rows = []
        for r in table:
            if len(r) != n or not all(isinstance(v, int) and not isinstance(v, bool) and 0 <= v < n for v in r):
                raise NotAGroup("table must be n x n with entries in 0..n-1")
            rows.append(tuple(r))
        self.table = tuple(rows)
        self.order = n
        self.name = name
        ids = [e for e in range(n) if all(rows[e][a] == a and rows[a][e] == a for a in range(n))]
        if not ids:
            raise NotAGroup("no identity element")
        self.identity = e = ids[0]
        inv = []
        for a in range(n):
            b = next((b for b in range(n) if rows[a][b] == e and rows[b][a] == e), None)
            if b is None:
                raise NotAGroup(f"element {a} has no inverse")
            inv.append(b)
        self.inverse = tuple(inv)
        for a in range(n):
            ra = rows[a]
            for b in range(n):
                ab = ra[b]
                rab, rb = rows[ab], rows[b]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise NotAGroup(f"not associative at ({a}, {b}, {c})")

    def __repr__(self):
        return f"FiniteGroup({self.name or self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_cyclic(self) -> bool:
        return any(self.element_order(a) == self.order for a in range(self.order))

    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    def generated(self, mask: int) -> int:
        """Bitmask of the subgroup generated by the elements in mask."""
        H = mask | (1 << self.identity)
        gens = _bits(mask)
        frontier = _bits(H)
        while frontier:
            fresh = []
            for h in frontier:
                for g in gens:
                    x = self.table[h][g]
                    if not H >> x & 1:
                        H |= 1 << x
                        fresh.append(x)
            frontier = fresh
        return H


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise NotAGroup("cyclic group order must be >= 1")
    return FiniteGroup([[(a + b) % n for b in range(n)] for a in range(n)], name=f"C{n}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Element (g, h) has index g * |H| + h."""
    m = H.order
    table = [[G.table[a // m][b // m] * m + H.table[a % m][b % m]
              for b in range(G.order * m)] for a in range(G.order * m)]
    return FiniteGroup(table, name=f"{G.name or G.order}x{H.name or H.order}")


def from_cayley(table: Sequence[Sequence[int]]) -> FiniteGroup:
    return FiniteGroup(table)


def from_permutations(gens: Sequence[Sequence[int]], name: str = "") -> FiniteGroup:
    """The permutation group generated by gens, elements sorted lexicographically."""
    if not gens:
        raise NotAGroup("need at least one generator")
    deg = len(gens[0])
    ident = tuple(range(deg))
    for g in gens:
        if sorted(g) != list(ident):
            raise NotAGroup(f"{list(g)} is not a permutation of 0..{deg - 1}")
    elems = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[i]] for i in range(deg))
                if q not in elems:
                    elems.add(q)
                    fresh.append(q)
        frontier = fresh
    order = sorted(elems)
    index = {p: i for i, p in enumerate(order)}
    # (p*q)(i) = p(q(i))
    table = [[index[tuple(p[q[i]] for i in range(deg))] for q in order] for p in order]
    return FiniteGroup(table, name=name)


def symmetric(k: int) -> FiniteGroup:
    return from_permutations(list(permutations(range(k))), name=f"S{k}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n (n >= 3)."""
    r = [(i + 1) % n for i in range(n)]
    s = [(-i) % n for i in range(n)]
    return from_permutations([r, s], name=f"D{n}")


def quaternion() -> FiniteGroup:
    """Q8 as permutations of itself: elements ±1, ±i, ±j, ±k."""
    # units as (sign, axis) with axis 0=1, 1=i, 2=j, 3=k
    prod = {(0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
            (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
            (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
            (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0)}
    elems = [(s, a) for s in (1, -1) for a in range(4)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(x, y):
        sign, axis = prod[(x[1], y[1])]
        return index[(x[0] * y[0] * sign, axis)]

    return FiniteGroup([[mul(x, y) for y in elems] for x in elems], name="Q8")


def group_from_json(text: str) -> FiniteGroup:
    """Parse {"order": n, "table": [[...], ...]}."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from exc
    if not isinstance(data, dict) or "table" not in data:
        raise ParseError('group JSON needs a "table"')
    table = data["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise ParseError('"table" must be an array of arrays')
    if "order" in data and data["order"] != len(table):
        raise ParseError(f'"order" is {data["order"]} but the table has {len(table)} rows')
    return from_cayley(table)


# ---------------------------------------------------------------- subgroups

@dataclass
class SubgroupLattice:
    group: FiniteGroup
    subgroups: list[int]
    lattice: FiniteLattice

    def elements(self, i: int) -> list[int]:
        return _bits(self.subgroups[i])

    def index(self, mask: int) -> int:
        return self.subgroups.index(mask)


def _check_order(G: FiniteGroup, max_order: int):
    if G.order > max_order:
        raise OrderTooLarge(f"group order {G.order} exceeds the limit {max_order}")


def subgroup_label(elements: Sequence[int]) -> str:
    return "[" + ", ".join(str(e) for e in elements) + "]"


def subgroup_lattice(G: FiniteGroup, max_order: int = MAX_ORDER) -> SubgroupLattice:
    _check_order(G, max_order)
    cyclics = []
    for a in range(G.order):
        C = G.generated(1 << a)
        if C not in cyclics:
            cyclics.append(C)
    found = set(cyclics)
    frontier = list(cyclics)
    while frontier:
        fresh = []
        for H in frontier:
            for C in cyclics:
                if C & ~H:
                    J = G.generated(H | C)
                    if J not in found:
                        found.add(J)
                        fresh.append(J)
        frontier = fresh
    subs = sorted(found, key=lambda m: (bin(m).count("1"), _bits(m)))
    pairs = [(i, j) for i, A in enumerate(subs) for j, B in enumerate(subs) if i != j and A & B == A]
    lat = lattice_from_leq([subgroup_label(_bits(m)) for m in subs], pairs)
    if subs[lat.bottom] != 1 << G.identity or subs[lat.top] != (1 << G.order) - 1:
        raise InternalDisagreement("subgroup lattice bounds are not {e} and G")
    return SubgroupLattice(G, subs, lat)


def subgroups_bruteforce(G: FiniteGroup) -> list[int]:
    """Every subset closed under multiplication, by exhaustive search (small orders only)."""
    out = []
    for mask in range(1 << G.order):
        if not mask >> G.identity & 1:
            continue
        els = _bits(mask)
        if all(mask >> G.table[a][b] & 1 for a in els for b in els):
            out.append(mask)
    return sorted(out, key=lambda m: (bin(m).count("1"), _bits(m)))


def _squarefree(n: int) -> bool:
    return all(e == 1 for e in factorize(n).values())


def factorize(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class GaloisVerdict:
    boolean: bool
    lattice_route: bool
    cyclic_squarefree_route: bool


def is_boolean_galois(G: FiniteGroup, max_order: int = MAX_ORDER) -> GaloisVerdict:
    """Boolean test of the subgroup lattice, against 'G cyclic of squarefree order'."""
    sl = subgroup_lattice(G, max_order)
    by_lattice = is_boolean(sl.lattice)
    by_group = G.is_cyclic() and _squarefree(G.order)
    if by_lattice != by_group:
        raise InternalDisagreement(f"{G}: lattice says {by_lattice}, cyclic/squarefree says {by_group}")
    return GaloisVerdict(by_lattice, by_lattice, by_group)


def coatoms_fixed_fields(G: FiniteGroup, max_order: int = MAX_ORDER) -> list[list[int]]:
    """Subgroups of prime order; under the Galois correspondence their fixed fields are the co-atoms."""
    sl = subgroup_lattice(G, max_order)
    atoms = sorted(sl.lattice.atoms())
    out = [sl.elements(i) for i in atoms]
    primes = factorize(G.order)
    if any(len(H) not in primes for H in out):
        raise InternalDisagreement("an atom of the subgroup lattice does not have prime order")
    if len(out) < len(primes):
        raise InternalDisagreement(f"{len(out)} co-atoms but {len(primes)} prime divisors")
    return out


def divisor_lattice(n: int) -> FiniteLattice:
    """Divisors of n ordered by divisibility."""
    if n < 1:
        raise ValueError("n must be >= 1")
    divs = [d for d in range(1, n + 1) if n % d == 0]
    pos = {d: i for i, d in enumerate(divs)}
    pairs = [(pos[d], pos[d * p]) for d in divs for p in factorize(n) if n % (d * p) == 0]
    L = lattice_from_leq([str(d) for d in divs], pairs)
    if is_boolean(L) != _squarefree(n):
        raise InternalDisagreement(f"divisor lattice of {n}: Boolean verdict disagrees with squarefreeness")
    return L


def cyclic_report(n: int) -> tuple[int, int, bool]:
    """(number of divisors, sum of prime exponents, squarefree), checked against divisor_lattice(n)."""
    exps = factorize(n)
    tau = 1
    for e in exps.values():
        tau *= e + 1
    ell = sum(exps.values())
    sqf = all(e == 1 for e in exps.values())
    L = divisor_lattice(n)
    if (L.size, length(L), is_boolean(L)) != (tau, ell, sqf):
        raise InternalDisagreement(f"cyclic report for {n} disagrees with the divisor lattice")
    if sqf and L.size != 2 ** len(exps):
        raise InternalDisagreement("squarefree divisor lattice is not of size 2^m")
    return tau, ell, sqf


def distributive_implies_cyclic_check(G: FiniteGroup, max_order: int = MAX_ORDER) -> bool:
    """Audit: a distributive subgroup lattice forces G cyclic. True when that holds for G."""
    sl = subgroup_lattice(G, max_order)
    dist, _ = is_distributive(sl.lattice)
    return (not dist) or G.is_cyclic()
