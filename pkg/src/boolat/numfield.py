"""Number fields L = Q[X]/(f) and their lattice of subfields.

The pipeline: factor f over L (Trager's norm method), read off the principal
subfields as kernels of rational linear maps, and close them under
intersection to obtain every intermediate field. Subfields are rational
subspaces of Q^n in reduced echelon form, so equality is exact.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from . import linalg
from .errors import (
    DegreeTooLarge,
    InternalDisagreement,
    MinimalExtension,
    NotAFactor,
    NotBoolean,
    NotGalois,
    NotIrreducible,
    NotMonic,
)
from .latcore import FiniteLattice, complements_of, is_boolean, lattice_from_leq
from .polycore import PolyQ, factor_q, resultant
from .polycore.factor import squarefree_part
from .polycore.poly import format_poly, fp_gcd, fp_monic

DEFAULT_MAX_DEGREE = 16

# Above this many factors of f over L, the set D of minimal polynomials f_K is
# read off the lattice instead of by testing every product of factors.
D_ENUMERATION_LIMIT = 10


class NumberField:
    """L = Q[X]/(minpoly); the generator x is the class of X."""

    def __init__(self, minpoly: PolyQ):
        self.minpoly = minpoly
        self.n = minpoly.deg
        n = self.n
        # coordinates of x^k for k < 2n - 1, used to reduce products
        red = []
        for k in range(max(2 * n - 1, 1)):
            red.append(tuple((PolyQ.monomial(k) % minpoly)[i] for i in range(n)))
        self._xpow = red

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.minpoly == other.minpoly

    def __hash__(self):
        return hash(("NumberField", self.minpoly))

    def __repr__(self):
        return f"NumberField({str(self.minpoly)!r})"

    @property
    def degree(self) -> int:
        return self.n

    def elem(self, coords: Iterable) -> "FieldElem":
        c = tuple(Fraction(v) for v in coords)
        if len(c) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(c)}")
        return FieldElem(self, c)

    def from_rational(self, q) -> "FieldElem":
        return self.elem([q] + [0] * (self.n - 1))

    def from_poly(self, g: PolyQ) -> "FieldElem":
        r = g % self.minpoly
        return self.elem(r[i] for i in range(self.n))

    @property
    def zero(self) -> "FieldElem":
        return self.from_rational(0)

    @property
    def one(self) -> "FieldElem":
        return self.from_rational(1)

    @property
    def gen(self) -> "FieldElem":
        if self.n == 1:
            return self.from_rational(-self.minpoly[0])
        return self.elem([0, 1] + [0] * (self.n - 2))

    def mul_coords(self, a: Sequence[Fraction], b: Sequence[Fraction]) -> tuple:
        n = self.n
        prod = [Fraction(0)] * (2 * n - 1)
        for i, u in enumerate(a):
            if u:
                for j, v in enumerate(b):
                    if v:
                        prod[i + j] += u * v
        out = [Fraction(0)] * n
        for k, c in enumerate(prod):
            if c:
                row = self._xpow[k]
                for i in range(n):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)

    def mult_matrix(self, z: "FieldElem") -> list[list[Fraction]]:
        """Row i holds the coordinates of z * x^i."""
        rows = []
        for i in range(self.n):
            e = [Fraction(0)] * self.n
            e[i] = Fraction(1)
            rows.append(list(self.mul_coords(z.coords, e)))
        return rows

    def norm(self, z: "FieldElem") -> Fraction:
        return linalg.det(self.mult_matrix(z))

    # Write-once caches: pure functions of minpoly, computed on first use.
    @cached_property
    def factors(self) -> tuple["PolyL", ...]:
        return tuple(_factor_over_field(self))

    @cached_property
    def principal_fields(self) -> tuple["Subfield", ...]:
        return tuple(principal_subfield(self, fa) for fa in self.factors)


@dataclass(frozen=True, eq=False)
class FieldElem:
    field: NumberField
    coords: tuple

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field == other.field and self.coords == other.coords
        if isinstance(other, (int, Fraction)):
            return self == self.field.from_rational(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def _lift(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            return other
        return self.field.from_rational(other)

    def __add__(self, other):
        other = self._lift(other)
        return FieldElem(self.field, tuple(a + b for a, b in zip(self.coords, other.coords)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, tuple(-a for a in self.coords))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FieldElem(self.field, tuple(a * other for a in self.coords))
        return FieldElem(self.field, self.field.mul_coords(self.coords, other.coords))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def inverse(self) -> "FieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0 in a number field")
        m = self.field.mult_matrix(self)
        # y * m = e_0  <=>  sum_i y_i (z x^i) = 1
        cols = [[m[i][j] for i in range(self.field.n)] for j in range(self.field.n)]
        e0 = [Fraction(1)] + [Fraction(0)] * (self.field.n - 1)
        return self.field.elem(linalg.solve(cols, e0))

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def to_poly(self) -> PolyQ:
        return PolyQ(self.coords)

    def __str__(self):
        return format_poly([str(c) for c in self.coords], var="x")

    def __repr__(self):
        return f"FieldElem({str(self)!r})"


class PolyL:
    """Polynomial with coefficients in a number field, ascending degree."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: Iterable[FieldElem]):
        self.field = field
        cs = [c if isinstance(c, FieldElem) else field.from_rational(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def from_polyq(cls, field: NumberField, f: PolyQ) -> "PolyL":
        return cls(field, [field.from_rational(c) for c in f.coeffs])

    @classmethod
    def linear(cls, field: NumberField, root: FieldElem) -> "PolyL":
        """X - root."""
        return cls(field, [-root, field.one])

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> FieldElem:
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, PolyL) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def sort_key(self):
        return (self.deg, tuple(c.coords for c in self.coeffs))

    def __add__(self, other: "PolyL"):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return PolyL(self.field, out)

    def __neg__(self):
        return PolyL(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "PolyL"):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (FieldElem, int, Fraction)):
            return PolyL(self.field, [c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return PolyL(self.field, [])
        out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return PolyL(self.field, out)

    def __divmod__(self, other: "PolyL"):
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        inv = other.lc.inverse()
        rem = list(self.coeffs)
        db = other.deg
        quot = [self.field.zero] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c.is_zero():
                continue
            q = c * inv
            quot[i - db] = q
            for j, b in enumerate(other.coeffs):
                rem[i - db + j] = rem[i - db + j] - q * b
        return PolyL(self.field, quot), PolyL(self.field, rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "PolyL") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "PolyL":
        if self.is_zero():
            return self
        return self * self.lc.inverse()

    def __call__(self, z: FieldElem) -> FieldElem:
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def shift(self, c: FieldElem) -> "PolyL":
        """Return p(X + c)."""
        lin = PolyL(self.field, [c, self.field.one])
        acc = PolyL(self.field, [])
        for a in reversed(self.coeffs):
            acc = acc * lin + PolyL(self.field, [a])
        return acc

    def coefficients_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c.is_zero():
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            s = str(c)
            single = " + " not in s and " - " not in s
            if single:
                neg = s.startswith("-")
                mag = s[1:] if neg else s
                if not mono:
                    body = mag
                elif mag == "1":
                    body = mono
                else:
                    body = f"{mag}*{mono}"
            else:
                neg = False
                body = f"({s})" + (f"*{mono}" if mono else "")
            terms.append(("-" if neg else "+", body))
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"PolyL({str(self)!r})"


def polyl_gcd(a: PolyL, b: PolyL) -> PolyL:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def polyl_lcm(a: PolyL, b: PolyL) -> PolyL:
    return (a * b // polyl_gcd(a, b)).monic()


# ---------------------------------------------------------------- construction

def nf_create(f: PolyQ) -> NumberField:
    if f.deg < 1:
        raise NotIrreducible(f"{f} has degree < 1")
    if f.lc != 1:
        raise NotMonic(f"{f} is not monic")
    facs = factor_q(f)
    if len(facs) != 1:
        raise NotIrreducible(f"{f} = " + " * ".join(f"({g})" for g in facs))
    return NumberField(f)


def elem_minpoly(L: NumberField, z: FieldElem) -> PolyQ:
    """Minimal polynomial over Q of z, from the first linear dependency among its powers."""
    powers = [L.one.coords]
    cur = L.one
    while True:
        cur = cur * z
        red, _ = linalg.rref(powers)
        if linalg.span_contains(red, cur.coords):
            d = len(powers)
            cols = [[powers[j][i] for j in range(d)] for i in range(L.n)]
            c = linalg.solve(cols, cur.coords)
            return PolyQ([-v for v in c] + [1])
        powers.append(cur.coords)


# ---------------------------------------------------------------- Trager

def _interpolate(xs: Sequence[int], ys: Sequence[Fraction]) -> PolyQ:
    """Newton divided differences, then expansion to coefficient form."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    acc = PolyQ.const(coef[-1])
    for i in range(n - 2, -1, -1):
        acc = acc * PolyQ((-xs[i], 1)) + coef[i]
    return acc


def norm_poly(L: NumberField, h: PolyL) -> PolyQ:
    """N(X) = Res_y(minpoly(y), h(X)(y)) = prod over embeddings of h, by evaluation at integers."""
    D = L.n * h.deg
    xs = list(range(D + 1))
    ys = []
    for a in xs:
        v = h(L.from_rational(a))
        ys.append(Fraction(0) if v.is_zero() else resultant(L.minpoly, v.to_poly()))
    return _interpolate(xs, ys)


def _is_squarefree_q(f: PolyQ) -> bool:
    _, ints = f.content_primitive()
    checked = 0
    p = 2
    while checked < 8 and p < 200:
        p += 1
        if any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)) or ints[-1] % p == 0:
            continue
        checked += 1
        fb = fp_monic([c % p for c in ints], p)
        d = [i * c % p for i, c in enumerate(fb)][1:]
        while d and d[-1] == 0:
            d.pop()
        if d and len(fp_gcd(fb, d, p)) == 1:
            return True
    return squarefree_part(f).deg == f.deg


def _shifts():
    yield 0
    s = 1
    while True:
        yield s
        yield -s
        s += 1


def _factor_over_field(L: NumberField) -> list[PolyL]:
    f = PolyL.from_polyq(L, L.minpoly)
    x = L.gen
    h, r = divmod(f, PolyL.linear(L, x))
    assert r.is_zero()
    if h.deg < 1:
        return []
    for s in _shifts():
        hs = h.shift(x * (-s))  # h(X - s x)
        N = norm_poly(L, hs)
        if _is_squarefree_q(N):
            break
    out = []
    for R in factor_q(N):
        g = polyl_gcd(hs, PolyL.from_polyq(L, R))
        if g.deg >= 1:
            out.append(g.shift(x * s).monic())
    out.sort(key=PolyL.sort_key)
    prod = PolyL.linear(L, x)
    for g in out:
        prod = prod * g
    if prod != f:
        raise InternalDisagreement("factors over L do not multiply back to the minimal polynomial")
    return out


def factor_over_field(L: NumberField) -> list[PolyL]:
    """Irreducible monic f_1..f_r with minpoly = (X - x) f_1 ... f_r over L.

    Sorted by degree, then lexicographically on coefficient coordinates.
    """
    return list(L.factors)


# ---------------------------------------------------------------- subfields

def _closure(L: NumberField, vectors: Iterable[Sequence[Fraction]]) -> list[list[Fraction]]:
    """rref basis of the smallest subalgebra containing 1 and the given vectors."""
    basis, _ = linalg.rref([list(L.one.coords)] + [list(v) for v in vectors], L.n)
    while True:
        new = []
        for i in range(len(basis)):
            for j in range(i, len(basis)):
                prod = L.mul_coords(basis[i], basis[j])
                if not linalg.span_contains(basis, prod):
                    new.append(list(prod))
        if not new:
            return basis
        basis, _ = linalg.rref(basis + new, L.n)


class Subfield:
    """A subfield K of L as a rational subspace (rref rows) with f_K cached."""

    def __init__(self, L: NumberField, basis: Sequence[Sequence[Fraction]], *, check: bool = True):
        red, _ = linalg.rref(basis, L.n)
        self.field = L
        self.basis = tuple(tuple(r) for r in red)
        if check:
            self._validate()
        self.fK = _minpoly_of_gen_linear(self)

    def _validate(self):
        L = self.field
        if not linalg.span_contains(self.basis, L.one.coords):
            raise InternalDisagreement("subspace does not contain 1")
        for i in range(len(self.basis)):
            for j in range(i, len(self.basis)):
                if not linalg.span_contains(self.basis, L.mul_coords(self.basis[i], self.basis[j])):
                    raise InternalDisagreement("subspace is not closed under multiplication")
        if L.n % self.dim:
            raise InternalDisagreement(f"subfield dimension {self.dim} does not divide {L.n}")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, Subfield) and self.field == other.field and self.basis == other.basis

    def __hash__(self):
        return hash(self.basis)

    def sort_key(self):
        return (self.dim, self.basis)

    def contains(self, z: FieldElem) -> bool:
        return linalg.span_contains(self.basis, z.coords)

    def issubset(self, other: "Subfield") -> bool:
        return all(linalg.span_contains(other.basis, v) for v in self.basis)

    def meet(self, other: "Subfield") -> "Subfield":
        return Subfield(self.field, linalg.intersect(self.basis, other.basis, self.field.n))

    def join(self, other: "Subfield") -> "Subfield":
        return Subfield(self.field, _closure(self.field, list(self.basis) + list(other.basis)))

    def elements(self) -> list[FieldElem]:
        return [self.field.elem(v) for v in self.basis]

    def label(self) -> str:
        return f"dim={self.dim}; f_K={self.fK}"

    def basis_strings(self) -> list[list[str]]:
        return [[str(c) for c in row] for row in self.basis]

    def __repr__(self):
        return f"Subfield({self.label()!r})"


def whole_field(L: NumberField) -> Subfield:
    return Subfield(L, [[Fraction(int(i == j)) for j in range(L.n)] for i in range(L.n)])


def base_field(L: NumberField) -> Subfield:
    return Subfield(L, [L.one.coords])


def _minpoly_of_gen_linear(K: Subfield) -> PolyL:
    """f_K by linear algebra: solve x^d = sum_{j<d} c_j x^j with c_j in K, d = n / dim K."""
    L = K.field
    d = L.n // K.dim
    x = L.gen
    xp = [L.one]
    for _ in range(d):
        xp.append(xp[-1] * x)
    kb = K.elements()
    # unknown (j, b) multiplies basis element kb[b] by x^j
    cols = []
    for j in range(d):
        for b in kb:
            cols.append((b * xp[j]).coords)
    A = [[cols[u][i] for u in range(len(cols))] for i in range(L.n)]
    sol = linalg.solve(A, xp[d].coords)
    if sol is None:
        raise InternalDisagreement("x has no relation of the expected degree over K")
    coeffs = []
    for j in range(d):
        c = L.zero
        for bi, b in enumerate(kb):
            c = c + b * sol[j * len(kb) + bi]
        coeffs.append(-c)
    return PolyL(L, coeffs + [L.one])


def principal_subfield(L: NumberField, f_alpha: PolyL) -> Subfield:
    """L_alpha = {g(x) : g in Q[X], deg g < n, g(X) ≡ g(x) mod f_alpha in L[X]}."""
    full = PolyL.from_polyq(L, L.minpoly)
    if f_alpha.deg < 1 or not f_alpha.divides(full):
        raise NotAFactor(f"{f_alpha} does not divide {L.minpoly} over L")
    d = f_alpha.deg
    # column i: coordinates of (X^i mod f_alpha) - x^i, flattened over the d coefficients
    columns = []
    red = PolyL(L, [L.one])
    xp = L.one
    X = PolyL(L, [L.zero, L.one])
    for i in range(L.n):
        diff = red - PolyL(L, [xp])
        col = []
        for k in range(d):
            c = diff.coeffs[k] if k < len(diff.coeffs) else L.zero
            col.extend(c.coords)
        columns.append(col)
        red = (red * X) % f_alpha
        xp = xp * L.gen
    rows = [[columns[i][r] for i in range(L.n)] for r in range(L.n * d)]
    return Subfield(L, linalg.nullspace(rows, L.n))


def distinct_principal_subfields(L: NumberField) -> list[Subfield]:
    """E_1..E_t: the principal subfields with duplicates merged, in first-occurrence order."""
    out: list[Subfield] = []
    for K in L.principal_fields:
        if K not in out:
            out.append(K)
    return out


def subfield_from_coeffs(L: NumberField, g: PolyL) -> Subfield:
    """K_g: the subalgebra generated by the coefficients of g."""
    if g.is_zero():
        raise ValueError("K_g of the zero polynomial")
    return Subfield(L, _closure(L, [c.coords for c in g.coeffs]))


def subfield_generated(L: NumberField, z: FieldElem) -> Subfield:
    """k[z]."""
    return Subfield(L, _closure(L, [z.coords]))


def minpoly_over_subfield(L: NumberField, K: Subfield) -> PolyL:
    """f_K computed twice: linear algebra over K, and (X - x) * prod{f_alpha : K ⊆ L_alpha}."""
    direct = K.fK
    prod = PolyL.linear(L, L.gen)
    for fa, La in zip(L.factors, L.principal_fields):
        if K.issubset(La):
            prod = prod * fa
    if prod != direct:
        raise InternalDisagreement(f"f_K mismatch: {direct} vs {prod}")
    return direct


def is_in_D(L: NumberField, g: PolyL) -> bool:
    """Whether g = f_K for some subfield K: g(x) = 0 and [L : K_g] = deg g."""
    if g.is_zero() or g.lc != L.one:
        raise NotMonic(f"{g} is not monic")
    if not g(L.gen).is_zero():
        return False
    Kg = subfield_from_coeffs(L, g)
    return Kg.dim * g.deg == L.n


# ---------------------------------------------------------------- the lattice [k, L]

@dataclass
class SubfieldLattice:
    field: NumberField
    subfields: list[Subfield]
    lattice: FiniteLattice
    principal_indices: list[int]
    coatom_indices: list[int]
    factors: list[PolyL] = field(default_factory=list)
    # factor_subfield[a] is the index of L_alpha for factors[a]
    factor_subfield: list[int] = field(default_factory=list)

    @property
    def t(self) -> int:
        return len(self.principal_indices)

    def index(self, K: Subfield) -> int:
        return self.subfields.index(K)

    @property
    def bottom(self) -> Subfield:
        return self.subfields[0]

    @property
    def top(self) -> Subfield:
        return self.subfields[-1]

    def is_galois(self) -> bool:
        return all(f.deg == 1 for f in self.factors)


def subfield_lattice(L: NumberField, max_degree: int = DEFAULT_MAX_DEGREE) -> SubfieldLattice:
    """All of [k, L], as the closure of the principal subfields under intersection."""
    if L.n > max_degree:
        raise DegreeTooLarge(f"degree {L.n} exceeds the limit {max_degree}")
    E = distinct_principal_subfields(L)
    top = whole_field(L)
    members = [top] + [K for K in E if K != top]
    frontier = list(members)
    while frontier:
        fresh = []
        for A in frontier:
            for B in list(members):
                C = A.meet(B)
                if C not in members and C not in fresh:
                    fresh.append(C)
        members.extend(fresh)
        frontier = fresh
    if len(members) > 2 ** len(E):
        raise InternalDisagreement(f"{len(members)} subfields exceed 2^t = {2 ** len(E)}")
    members.sort(key=Subfield.sort_key)
    pairs = [(i, j) for i, A in enumerate(members) for j, B in enumerate(members) if i != j and A.issubset(B)]
    lat = lattice_from_leq([K.label() for K in members], pairs)
    if lat.bottom != 0 or lat.top != len(members) - 1:
        raise InternalDisagreement("bottom/top of [k,L] are not k and L")
    for K in members:
        minpoly_over_subfield(L, K)
    return SubfieldLattice(
        field=L,
        subfields=members,
        lattice=lat,
        principal_indices=[members.index(K) for K in E],
        coatom_indices=sorted(lat.coatoms()),
        factors=list(L.factors),
        factor_subfield=[members.index(K) for K in L.principal_fields],
    )


def coatoms_field(lat: SubfieldLattice) -> list[Subfield]:
    """Co-atoms via minimality of F_beta = {alpha : f_alpha | m_beta}, checked against the order."""
    if len(lat.subfields) <= 2:
        raise MinimalExtension("k ⊂ L has no proper intermediate field")
    E = [lat.subfields[i] for i in lat.principal_indices]
    F = []
    for Eb in E:
        F.append(frozenset(a for a, fa in enumerate(lat.factors) if fa.divides(Eb.fK)))
    chosen = [Eb for Eb, Fb in zip(E, F) if not any(Fg < Fb for Fg in F)]
    by_index = sorted(lat.index(K) for K in chosen)
    if by_index != sorted(lat.lattice.coatoms()):
        raise InternalDisagreement(f"co-atoms from F_beta {by_index} differ from the order")
    return [lat.subfields[i] for i in by_index]


def _coatom_indices(lat: SubfieldLattice) -> list[int]:
    if len(lat.subfields) <= 2:
        return sorted(lat.lattice.coatoms())
    return [lat.index(K) for K in coatoms_field(lat)]


def compute_D(lat: SubfieldLattice) -> tuple[list[PolyL], str]:
    """The set D = {f_K}. Enumerates (X - x) * prod(subset of factors) and keeps the members
    passing the degree test; falls back to the lattice when there are too many factors."""
    L = lat.field
    from_lattice = sorted((K.fK for K in lat.subfields), key=PolyL.sort_key)
    r = len(lat.factors)
    if r > D_ENUMERATION_LIMIT:
        return from_lattice, "lattice"
    base = PolyL.linear(L, L.gen)
    found = []
    for size in range(r + 1):
        for combo in combinations(range(r), size):
            g = base
            for a in combo:
                g = g * lat.factors[a]
            if is_in_D(L, g):
                found.append(g)
    found.sort(key=PolyL.sort_key)
    if found != from_lattice:
        raise InternalDisagreement("D from the degree test differs from {f_K : K in [k,L]}")
    return found, "enumeration"


def sup_in_D(D: Sequence[PolyL], polys: Sequence[PolyL], L: NumberField) -> PolyL:
    """Least element of D (under divisibility) divisible by every member of polys."""
    if not polys:
        return PolyL.linear(L, L.gen)
    m = polys[0]
    for g in polys[1:]:
        m = polyl_lcm(m, g)
    above = [g for g in D if m.divides(g)]
    best = min(above, key=lambda g: g.deg)
    if not all(best.divides(g) for g in above):
        raise InternalDisagreement("D has no least upper bound")
    return best


@dataclass
class BooleanCertificate:
    boolean: bool
    coatoms: list[int]
    D_route: str
    representations: dict[int, list[list[int]]] = field(default_factory=dict)

    def failures(self) -> dict[int, list[list[int]]]:
        return {k: v for k, v in self.representations.items() if len(v) != 1}


def is_boolean_field(lat: SubfieldLattice) -> BooleanCertificate:
    """Boolean test by unique co-atom representations f_K = sup_D{m_beta : beta in T}."""
    L = lat.field
    ca = _coatom_indices(lat)
    D, route = compute_D(lat)
    reps: dict[int, list[list[int]]] = {}
    m = {i: lat.subfields[i].fK for i in ca}
    sups = {}
    for size in range(len(ca) + 1):
        for T in combinations(ca, size):
            sups[T] = sup_in_D(D, [m[i] for i in T], L)
    for idx, K in enumerate(lat.subfields):
        if idx == lat.lattice.top:
            continue
        reps[idx] = [list(T) for T, s in sups.items() if s == K.fK]
    verdict = all(len(v) == 1 for v in reps.values())
    if verdict != is_boolean(lat.lattice):
        raise InternalDisagreement("polynomial Boolean test disagrees with the lattice test")
    return BooleanCertificate(verdict, ca, route, reps)


def complement_of_element(lat: SubfieldLattice, z: FieldElem) -> Subfield:
    """(k[z])° as the intersection of the co-atoms not containing z."""
    if not is_boolean(lat.lattice):
        raise NotBoolean("[k,L] is not Boolean")
    L = lat.field
    result = lat.top
    for i in _coatom_indices(lat):
        B = lat.subfields[i]
        if not B.contains(z):
            result = result.meet(B)
    Kz = subfield_generated(L, z)
    if Kz.meet(result) != lat.bottom or Kz.join(result) != lat.top:
        raise InternalDisagreement("computed complement fails meet/join test")
    return lat.subfields[lat.index(result)]


def galois_complement_check(lat: SubfieldLattice, T: Subfield, U: Subfield) -> bool:
    """Whether U = T° in a Galois Boolean [k,L]: [T:k][U:k] = n and TU = L."""
    if not lat.is_galois():
        raise NotGalois("some factor of f over L is not linear")
    if not is_boolean(lat.lattice):
        raise NotBoolean("[k,L] is not Boolean")
    verdict = T.dim * U.dim == lat.field.n and T.join(U) == lat.top
    direct = lat.index(U) in complements_of(lat.lattice, lat.index(T))
    if verdict != direct:
        raise InternalDisagreement("degree test and complement lookup disagree")
    return verdict
