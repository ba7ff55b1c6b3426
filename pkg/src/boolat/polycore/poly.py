"""Dense univariate polynomials over Q and over a prime field F_p.

Both types are immutable; coefficients are stored in ascending degree and the
zero polynomial is the empty tuple.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import ZeroPolynomial


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class PolyQ:
    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([Fraction(c) for c in coeffs])
        self._hash = None

    @classmethod
    def x(cls) -> "PolyQ":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "PolyQ":
        return cls((c,))

    @classmethod
    def monomial(cls, deg: int, c=1) -> "PolyQ":
        return cls([0] * deg + [c])

    @property
    def deg(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, PolyQ):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == PolyQ.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("PolyQ", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"PolyQ({str(self)!r})"

    def __str__(self):
        return format_poly([str(c) for c in self.coeffs], var="X")

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    @staticmethod
    def _coerce(other) -> "PolyQ":
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)):
            return PolyQ.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return PolyQ(out)

    __radd__ = __add__

    def __neg__(self):
        return PolyQ([-c for c in self.coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PolyQ([c * other for c in self.coeffs])
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = PolyQ.const(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "PolyQ"):
        other = self._coerce(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.deg
        inv = 1 / other.lc
        quot = [Fraction(0)] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = c * inv
            quot[i - db] = q
            for j, b in enumerate(other.coeffs):
                rem[i - db + j] -= q * b
        return PolyQ(quot), PolyQ(rem[:db] if db > 0 else [])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "PolyQ") -> bool:
        return (other % self).is_zero()

    def monic(self) -> "PolyQ":
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def derivative(self) -> "PolyQ":
        return PolyQ([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def compose(self, other: "PolyQ") -> "PolyQ":
        acc = PolyQ()
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def shift(self, s) -> "PolyQ":
        """Return f(X + s)."""
        return self.compose(PolyQ((s, 1)))

    def content_primitive(self) -> tuple[Fraction, list[int]]:
        """Split into a rational content and a primitive integer polynomial with positive lc."""
        if not self.coeffs:
            raise ZeroPolynomial("content of the zero polynomial")
        from math import gcd, lcm

        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for c in ints:
            g = gcd(g, c)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), [c // g for c in ints]

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "PolyQ":
        return cls(Fraction(s) for s in data)


class PolyFp:
    """Polynomial with coefficients reduced into [0, p)."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Iterable[int] = ()):
        self.p = p
        self.coeffs = _trim([int(c) % p for c in coeffs])

    @property
    def deg(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, PolyFp):
            return NotImplemented
        return self.p == other.p and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("PolyFp", self.p, self.coeffs))

    def __lt__(self, other: "PolyFp"):
        return (self.deg, self.coeffs[::-1]) < (other.deg, other.coeffs[::-1])

    def __repr__(self):
        return f"PolyFp({self.p}, {str(self)!r})"

    def __str__(self):
        return format_poly([str(c) for c in self.coeffs], var="X")

    def __add__(self, other: "PolyFp"):
        return PolyFp(self.p, fp_add(self.coeffs, other.coeffs, self.p))

    def __sub__(self, other: "PolyFp"):
        return PolyFp(self.p, fp_sub(self.coeffs, other.coeffs, self.p))

    def __mul__(self, other: "PolyFp | int"):
        if isinstance(other, int):
            return PolyFp(self.p, [c * other for c in self.coeffs])
        return PolyFp(self.p, fp_mul(self.coeffs, other.coeffs, self.p))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        result = PolyFp(self.p, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "PolyFp"):
        q, r = fp_divmod(self.coeffs, other.coeffs, self.p)
        return PolyFp(self.p, q), PolyFp(self.p, r)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def monic(self) -> "PolyFp":
        return PolyFp(self.p, fp_monic(self.coeffs, self.p))

    def derivative(self) -> "PolyFp":
        return PolyFp(self.p, [i * c for i, c in enumerate(self.coeffs)][1:])

    @classmethod
    def from_polyq(cls, f: PolyQ, p: int) -> "PolyFp":
        out = []
        for c in f.coeffs:
            if c.denominator % p == 0:
                raise ValueError(f"denominator of {c} vanishes mod {p}")
            out.append(c.numerator * pow(c.denominator, -1, p))
        return cls(p, out)


# --- list-level arithmetic mod p (hot loops in factorization use these directly) ---

def fp_trim(a: list) -> list:
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_add(a: Sequence[int], b: Sequence[int], p: int) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return fp_trim(out)


def fp_sub(a: Sequence[int], b: Sequence[int], p: int) -> list:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return fp_trim(out)


def fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return fp_trim([c % p for c in out])


def fp_divmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list, list]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(rem) <= db:
        return [], fp_trim([c % p for c in rem])
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i] % p
        if c == 0:
            continue
        q = c * inv % p
        quot[i - db] = q
        for j, y in enumerate(b):
            rem[i - db + j] -= q * y
    return fp_trim(quot), fp_trim([c % p for c in rem[:db]])


def fp_mod(a, b, p):
    return fp_divmod(a, b, p)[1]


def fp_monic(a: Sequence[int], p: int) -> list:
    if not a:
        return []
    inv = pow(a[-1], -1, p)
    return [c * inv % p for c in a]


def fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list:
    a, b = fp_trim(list(a)), fp_trim(list(b))
    while b:
        a, b = b, fp_mod(a, b, p)
    return fp_monic(a, p)


def fp_xgcd(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list, list, list]:
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = fp_trim(list(a)), fp_trim(list(b))
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = fp_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, fp_sub(s0, fp_mul(q, s1, p), p)
        t0, t1 = t1, fp_sub(t0, fp_mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    inv = pow(r0[-1], -1, p)
    scale = lambda v: [c * inv % p for c in v]
    return scale(r0), scale(s0), scale(t0)


def fp_powmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list:
    result = [1]
    b = fp_mod(list(base), mod, p)
    while e:
        if e & 1:
            result = fp_mod(fp_mul(result, b, p), mod, p)
        b = fp_mod(fp_mul(b, b, p), mod, p)
        e >>= 1
    return result


# --- rendering ---

def format_poly(coeffs: Sequence[str], var: str = "X") -> str:
    """Render ascending coefficient strings as `c_n*X^n + ... + c_0`, highest degree first."""
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c in ("0", ""):
            continue
        neg = c.startswith("-")
        mag = c[1:] if neg else c
        if i == 0:
            body = mag
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == "1" else f"{mag}*{mono}"
        terms.append(("-" if neg else "+", body))
    if not terms:
        return "0"
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
