"""Finite lattices on bitsets, with the predicates needed for Boolean tests.

Element i is identified with bit i. `down[i]` is the set of j with j <= i and
`up[i]` the set of j with i <= j. Every witness search scans indices in
increasing order, so outputs are deterministic.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from ..errors import (
    InternalDisagreement,
    NoBoundedEnds,
    NotALattice,
    NotAPoset,
    NotBoolean,
    NotDistributive,
    NotInInterval,
)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


class FiniteLattice:
    """An immutable finite lattice. Build with `lattice_from_leq`."""

    def __init__(self, labels: Sequence[str], down: Sequence[int], origin: Sequence[int] | None = None):
        m = len(labels)
        if m == 0:
            raise NoBoundedEnds("empty poset has no bottom or top")
        self.labels = tuple(labels)
        self.size = m
        self.down = tuple(down)
        up = [0] * m
        for i in range(m):
            for j in _bits(self.down[i]):
                up[j] |= 1 << i
        self.up = tuple(up)
        # indices into a parent lattice, for intervals
        self.origin = tuple(origin) if origin is not None else tuple(range(m))
        full = (1 << m) - 1
        for i in range(m):
            if not self.down[i] >> i & 1:
                raise NotAPoset(f"relation is not reflexive at {self.labels[i]!r}")
            for j in _bits(self.down[i]):
                if j != i and self.down[j] >> i & 1:
                    raise NotAPoset(f"{self.labels[i]!r} <= {self.labels[j]!r} <= {self.labels[i]!r}")
        bottoms = [i for i in range(m) if self.up[i] == full]
        tops = [i for i in range(m) if self.down[i] == full]
        if not bottoms or not tops:
            raise NoBoundedEnds("poset lacks a least or a greatest element")
        self.bottom, self.top = bottoms[0], tops[0]
        by_down = {d: i for i, d in enumerate(self.down)}
        by_up = {u: i for i, u in enumerate(self.up)}
        meet = [[0] * m for _ in range(m)]
        join = [[0] * m for _ in range(m)]
        for a in range(m):
            for b in range(a, m):
                g = by_down.get(self._glb_set(a, b))
                h = by_up.get(self._lub_set(a, b))
                if g is None or h is None:
                    kind = "meet" if g is None else "join"
                    raise NotALattice(f"{self.labels[a]!r} and {self.labels[b]!r} have no {kind}")
                meet[a][b] = meet[b][a] = g
                join[a][b] = join[b][a] = h
        self.meet_table = tuple(tuple(r) for r in meet)
        self.join_table = tuple(tuple(r) for r in join)

    def _glb_set(self, a: int, b: int) -> int:
        # a greatest lower bound g has down[g] equal to the set of common lower bounds
        return self.down[a] & self.down[b]

    def _lub_set(self, a: int, b: int) -> int:
        return self.up[a] & self.up[b]

    def __len__(self):
        return self.size

    def __repr__(self):
        return f"FiniteLattice(size={self.size})"

    def leq(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq(a, b)

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def meet_all(self, xs: Iterable[int]) -> int:
        acc = self.top
        for x in xs:
            acc = self.meet_table[acc][x]
        return acc

    def join_all(self, xs: Iterable[int]) -> int:
        acc = self.bottom
        for x in xs:
            acc = self.join_table[acc][x]
        return acc

    def below(self, a: int) -> list[int]:
        return _bits(self.down[a])

    def above(self, a: int) -> list[int]:
        return _bits(self.up[a])

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for b in range(self.size):
            strict = self.down[b] & ~(1 << b)
            # a is covered by b when nothing strictly between them exists
            covs = [a for a in _bits(strict) if not strict & self.up[a] & ~(1 << a)]
            out.append(tuple(covs))
        return tuple(out)

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.size)]
        for b, covs in enumerate(self.lower_covers):
            for a in covs:
                out[a].append(b)
        return tuple(tuple(sorted(c)) for c in out)

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (a, b) with a covered by b."""
        return [(a, b) for b in range(self.size) for a in self.lower_covers[b]]

    def is_cover(self, a: int, b: int) -> bool:
        return a in self.lower_covers[b]

    def atoms(self) -> set[int]:
        return set() if self.size == 1 else set(self.upper_covers[self.bottom])

    def coatoms(self) -> set[int]:
        return set() if self.size == 1 else set(self.lower_covers[self.top])

    @cached_property
    def distributive(self) -> bool:
        return _distributivity(self)[0]

    def strict_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for b in range(self.size) for a in _bits(self.down[b]) if a != b]


def lattice_from_leq(labels: Sequence[str], pairs: Iterable[tuple[int, int]]) -> FiniteLattice:
    """Reflexive-transitive closure of `pairs` (each (i, j) meaning i <= j), then the lattice."""
    m = len(labels)
    down = [1 << i for i in range(m)]
    for i, j in pairs:
        if not (0 <= i < m and 0 <= j < m):
            raise IndexError(f"pair ({i}, {j}) outside 0..{m - 1}")
        down[j] |= 1 << i
    # Warshall: if k <= j then everything below k is below j
    for k in range(m):
        bit = 1 << k
        dk = down[k]
        for j in range(m):
            if down[j] & bit:
                down[j] |= dk
    return FiniteLattice(labels, down)


def chain(n: int) -> FiniteLattice:
    """0 < 1 < ... < n-1."""
    return lattice_from_leq([str(i) for i in range(n)], [(i, i + 1) for i in range(n - 1)])


def boolean_cube(k: int) -> FiniteLattice:
    """Subsets of a k-set ordered by inclusion; element i is the subset with bitmask i."""
    m = 1 << k
    labels = ["{" + ",".join(str(b) for b in range(k) if i >> b & 1) + "}" for i in range(m)]
    pairs = [(i, i | (1 << b)) for i in range(m) for b in range(k) if not i >> b & 1]
    return lattice_from_leq(labels, pairs)


# ---------------------------------------------------------------- distributivity

def join_irreducibles(L: FiniteLattice) -> set[int]:
    return {b for b in range(L.size) if b != L.bottom and len(L.lower_covers[b]) == 1}


def meet_irreducibles(L: FiniteLattice) -> set[int]:
    return {a for a in range(L.size) if a != L.top and len(L.upper_covers[a]) == 1}


def is_distributive(L: FiniteLattice) -> tuple[bool, tuple[int, int, int] | None]:
    """Distributivity via join-irreducibles: L is distributive iff x ↦ {j in J : j <= x}
    turns joins into unions. A failure j <= x∨y with j ≰ x, j ≰ y gives the triple
    (j, x, y) violating j∧(x∨y) = (j∧x)∨(j∧y)."""
    return _distributivity(L)


def _jmask(L: FiniteLattice, J: int, x: int) -> int:
    return L.down[x] & J


def _distributivity(L: FiniteLattice):
    J = 0
    for j in join_irreducibles(L):
        J |= 1 << j
    for x in range(L.size):
        for y in range(x + 1, L.size):
            gap = _jmask(L, J, L.join(x, y)) & ~(_jmask(L, J, x) | _jmask(L, J, y))
            if gap:
                j = _bits(gap)[0]
                return False, (j, x, y)
    return True, None


def distributive_bruteforce(L: FiniteLattice) -> tuple[bool, tuple[int, int, int] | None]:
    """The triple scan x∧(y∨z) = (x∧y)∨(x∧z), kept as an oracle."""
    M, Jn = L.meet_table, L.join_table
    for x in range(L.size):
        for y in range(L.size):
            for z in range(L.size):
                if M[x][Jn[y][z]] != Jn[M[x][y]][M[x][z]]:
                    return False, (x, y, z)
    return True, None


def _distributive_flag(L: FiniteLattice) -> bool:
    return L.distributive


def complements_of(L: FiniteLattice, t: int) -> set[int]:
    out = {u for u in range(L.size) if L.meet(t, u) == L.bottom and L.join(t, u) == L.top}
    if len(out) > 1 and _distributive_flag(L):
        raise InternalDisagreement(f"{L.labels[t]!r} has {len(out)} complements in a distributive lattice")
    return out


def length(L: FiniteLattice) -> int:
    """Longest chain from bottom to top, counted in covers."""
    return _chain_lengths(L, L.bottom)[1][L.top]


def _chain_lengths(L: FiniteLattice, a: int) -> tuple[dict[int, int], dict[int, int]]:
    """Shortest and longest maximal-chain lengths from a to every b >= a."""
    order = sorted(L.above(a), key=lambda b: bin(L.down[b]).count("1"))
    lo, hi = {a: 0}, {a: 0}
    for b in order:
        if b == a:
            continue
        preds = [c for c in L.lower_covers[b] if c in lo]
        lo[b] = min(lo[c] for c in preds) + 1
        hi[b] = max(hi[c] for c in preds) + 1
    return lo, hi


def jordan_holder(L: FiniteLattice) -> bool:
    """All maximal chains between any two comparable elements have the same length."""
    for a in range(L.size):
        lo, hi = _chain_lengths(L, a)
        if lo != hi:
            return False
    return True


def is_boolean(L: FiniteLattice) -> bool:
    """Three routes, compared: complemented distributive; distributive with |L| = 2^length
    and length = #atoms; distributive with every join-irreducible an atom."""
    dist = _distributive_flag(L)
    by_def = dist and all(complements_of(L, t) for t in range(L.size))
    n = length(L)
    by_count = dist and L.size == 2 ** n
    if dist and by_count != (n == len(L.atoms())):
        raise InternalDisagreement("|L| = 2^length and length = #atoms disagree on a distributive lattice")
    by_irred = dist and join_irreducibles(L) <= L.atoms()
    if not (by_def == by_count == by_irred):
        raise InternalDisagreement(f"Boolean routes disagree: {by_def}, {by_count}, {by_irred}")
    return by_def


# ---------------------------------------------------------------- decompositions

@dataclass(frozen=True)
class Decomposition:
    """Outcome of a search for irredundant atom (or co-atom) representations.

    kind is "unique", "none" or "ambiguous"; reps holds one or two witnesses.
    """
    kind: str
    reps: tuple[tuple[int, ...], ...] = ()

    @property
    def unique(self) -> bool:
        return self.kind == "unique"


def _decompose(L: FiniteLattice, t: int, gens: Sequence[int], combine, below) -> Decomposition:
    usable = [g for g in sorted(gens) if below(g, t)]
    found: list[tuple[int, ...]] = []
    for size in range(len(usable) + 1):
        for S in combinations(usable, size):
            if combine(S) != t:
                continue
            if any(combine(S[:i] + S[i + 1:]) == t for i in range(len(S))):
                continue
            found.append(S)
            if len(found) == 2:
                return Decomposition("ambiguous", tuple(found))
    if not found:
        return Decomposition("none")
    return Decomposition("unique", tuple(found))


def factorial_decomposition(L: FiniteLattice, t: int) -> Decomposition:
    """Irredundant representations of t as a join of atoms, in increasing size."""
    return _decompose(L, t, L.atoms(), L.join_all, L.leq)


def cofactorial_decomposition(L: FiniteLattice, t: int) -> Decomposition:
    """Irredundant representations of t as a meet of co-atoms."""
    return _decompose(L, t, L.coatoms(), L.meet_all, lambda g, x: L.leq(x, g))


def is_factorial(L: FiniteLattice) -> bool:
    verdict = all(factorial_decomposition(L, t).unique for t in range(L.size))
    # equivalence with Boolean is only a theorem for distributive lattices
    if _distributive_flag(L) and verdict != is_boolean(L):
        raise InternalDisagreement("factorial and Boolean verdicts differ")
    return verdict


def is_cofactorial(L: FiniteLattice) -> bool:
    verdict = all(cofactorial_decomposition(L, t).unique for t in range(L.size))
    if _distributive_flag(L) and verdict != is_boolean(L):
        raise InternalDisagreement("co-factorial and Boolean verdicts differ")
    return verdict


def is_atomistic(L: FiniteLattice) -> bool:
    """Every element is a join of atoms."""
    atoms = L.atoms()
    return all(L.join_all(a for a in atoms if L.leq(a, t)) == t for t in range(L.size))


def is_coatomistic(L: FiniteLattice) -> bool:
    coatoms = L.coatoms()
    return all(L.meet_all(c for c in coatoms if L.leq(t, c)) == t for t in range(L.size))


def ucc_holds(L: FiniteLattice) -> tuple[bool, tuple[int, int] | None]:
    """Upper covering: T∧U ⋖ T implies U ⋖ T∨U. Returns a witness (T, U) on failure."""
    for t in range(L.size):
        for u in range(L.size):
            if L.is_cover(L.meet(t, u), t) and not L.is_cover(u, L.join(t, u)):
                return False, (t, u)
    return True, None


def goldie_dimension(L: FiniteLattice) -> int:
    """Size of an irredundant representation of bottom as a meet of meet-irreducibles."""
    if not _distributive_flag(L):
        raise NotDistributive("Goldie dimension is only defined here for distributive lattices")
    M = sorted(meet_irreducibles(L))
    sizes = set()
    for size in range(len(M) + 1):
        for S in combinations(M, size):
            if L.meet_all(S) != L.bottom:
                continue
            if any(L.meet_all(S[:i] + S[i + 1:]) == L.bottom for i in range(len(S))):
                continue
            sizes.add(size)
    if len(sizes) != 1:
        raise InternalDisagreement(f"irredundant meet representations of bottom have sizes {sorted(sizes)}")
    return sizes.pop()


# ---------------------------------------------------------------- intervals, duals

def interval(L: FiniteLattice, a: int, b: int) -> FiniteLattice:
    """[a, b] as a lattice; `origin` maps its indices back into L."""
    if not L.leq(a, b):
        raise NotInInterval(f"{L.labels[a]!r} is not below {L.labels[b]!r}")
    members = [x for x in range(L.size) if L.leq(a, x) and L.leq(x, b)]
    pos = {x: i for i, x in enumerate(members)}
    mask_of = lambda d: sum(1 << pos[x] for x in _bits(d) if x in pos)  # noqa: E731
    down = [mask_of(L.down[x]) for x in members]
    origin = [L.origin[x] for x in members]
    return FiniteLattice([L.labels[x] for x in members], down, origin=origin)


def _sub_index(L: FiniteLattice, sub: FiniteLattice, x: int) -> int:
    return sub.origin.index(L.origin[x])


def relative_complement(L: FiniteLattice, a: int, b: int, v: int) -> int:
    """Complement of v in [a, b] as a ∨ (b ∧ v°), checked against a direct search."""
    if not (L.leq(a, v) and L.leq(v, b)):
        raise NotInInterval(f"{L.labels[v]!r} is not in [{L.labels[a]!r}, {L.labels[b]!r}]")
    if not is_boolean(L):
        raise NotBoolean("relative complements are computed in Boolean lattices only")
    (vc,) = complements_of(L, v)
    formula = L.join(a, L.meet(b, vc))
    direct = [u for u in range(L.size) if L.leq(a, u) and L.leq(u, b)
              and L.meet(v, u) == a and L.join(v, u) == b]
    if direct != [formula]:
        raise InternalDisagreement(f"relative complement {formula} vs direct search {direct}")
    return formula


def dual(L: FiniteLattice) -> FiniteLattice:
    D = FiniteLattice(L.labels, L.up, origin=L.origin)
    if D.atoms() != L.coatoms() or D.coatoms() != L.atoms():
        raise InternalDisagreement("dual does not swap atoms and co-atoms")
    if is_boolean(D) != is_boolean(L):
        raise InternalDisagreement("Boolean verdict changed under duality")
    return D


def boolean_recursive(L: FiniteLattice) -> bool:
    """Boolean test by induction: a point or an edge, or some atom U and T with
    [0,T] ∪ [U,1] = L, K ↦ U∨K a bijection [0,T] → [U,1], and [0,T] Boolean."""
    verdict = _boolean_recursive(L)
    if verdict != is_boolean(L):
        raise InternalDisagreement("recursive Boolean test disagrees with is_boolean")
    return verdict


def _boolean_recursive(L: FiniteLattice) -> bool:
    if L.size <= 2:
        return True
    full = (1 << L.size) - 1
    inner = [t for t in range(L.size) if t not in (L.bottom, L.top)]
    for u in sorted(L.atoms()):
        upper = L.up[u]
        for t in inner:
            lower = L.down[t]
            if lower | upper != full:
                continue
            lows = _bits(lower)
            images = {L.join(u, k) for k in lows}
            if len(images) != len(lows) or sum(1 << i for i in images) != upper:
                continue
            if _boolean_recursive(interval(L, L.bottom, t)):
                return True
    return False


# ---------------------------------------------------------------- isomorphism

def find_isomorphism(A: FiniteLattice, B: FiniteLattice) -> list[int] | None:
    """An order isomorphism A → B as a list, by backtracking with rank invariants."""
    if A.size != B.size:
        return None

    def signature(L: FiniteLattice, x: int):
        return (bin(L.down[x]).count("1"), bin(L.up[x]).count("1"),
                len(L.lower_covers[x]), len(L.upper_covers[x]))

    sa = [signature(A, x) for x in range(A.size)]
    sb = [signature(B, x) for x in range(B.size)]
    if sorted(sa) != sorted(sb):
        return None
    order = sorted(range(A.size), key=lambda x: sa[x][0])
    image = [-1] * A.size
    used = [False] * B.size

    def consistent(x: int, y: int) -> bool:
        for x2 in range(A.size):
            y2 = image[x2]
            if y2 < 0:
                continue
            if A.leq(x2, x) != B.leq(y2, y) or A.leq(x, x2) != B.leq(y, y2):
                return False
        return True

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in range(B.size):
            if not used[y] and sb[y] == sa[x] and consistent(x, y):
                image[x], used[y] = y, True
                if extend(k + 1):
                    return True
                image[x], used[y] = -1, False
        return False

    return list(image) if extend(0) else None


def is_isomorphic(A: FiniteLattice, B: FiniteLattice) -> bool:
    return find_isomorphism(A, B) is not None


# ---------------------------------------------------------------- report

@dataclass
class LatticeReport:
    size: int
    length: int
    atoms: list[int]
    coatoms: list[int]
    is_lattice: bool
    is_distributive: bool
    distributive_witness: list[int] | None
    is_atomistic: bool
    is_coatomistic: bool
    is_factorial: bool
    is_cofactorial: bool
    is_boolean: bool
    jordan_holder: bool
    ucc: bool
    ucc_witness: list[int] | None
    goldie_dimension: int | None
    complements: dict[int, list[int]] = field(default_factory=dict)

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["complements"] = {str(k): v for k, v in self.complements.items()}
        return out


def lattice_report(L: FiniteLattice) -> LatticeReport:
    dist, dw = is_distributive(L)
    boolean = is_boolean(L)
    ucc, uw = ucc_holds(L)
    report = LatticeReport(
        size=L.size,
        length=length(L),
        atoms=sorted(L.atoms()),
        coatoms=sorted(L.coatoms()),
        is_lattice=True,
        is_distributive=dist,
        distributive_witness=list(dw) if dw else None,
        is_atomistic=is_atomistic(L),
        is_coatomistic=is_coatomistic(L),
        is_factorial=is_factorial(L),
        is_cofactorial=is_cofactorial(L),
        is_boolean=boolean,
        jordan_holder=jordan_holder(L),
        ucc=ucc,
        ucc_witness=list(uw) if uw else None,
        goldie_dimension=goldie_dimension(L) if dist else None,
        complements={t: sorted(complements_of(L, t)) for t in range(L.size)},
    )
    if boolean and not (dist and report.is_factorial and L.size == 2 ** report.length):
        raise InternalDisagreement("Boolean lattice fails distributive/factorial/size invariants")
    return report
