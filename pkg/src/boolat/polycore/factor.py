"""gcd, resultants and factorization over F_p and Q.

Rational factorization is Zassenhaus: factor modulo a small prime, Hensel-lift
to a power exceeding twice the Landau-Mignotte bound, then recombine subsets of
modular factors in increasing size.
"""
from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations
from math import isqrt

from ..errors import NotCoprime, NotSquarefreeModP, ZeroPolynomial
from ..linalg import det
from .poly import (
    PolyFp,
    PolyQ,
    fp_add,
    fp_divmod,
    fp_gcd,
    fp_monic,
    fp_mul,
    fp_powmod,
    fp_sub,
    fp_xgcd,
)

# Deterministic equal-degree splitting gives up and switches to seeded random
# candidates after this many attempts.
EDF_SWEEP_LIMIT = 400
EDF_SEED = 20240601

# Number of admissible primes examined before committing to one for Zassenhaus.
PRIME_TRIALS = 6


# ---------------------------------------------------------------- over Q

def poly_gcd_q(a: PolyQ, b: PolyQ) -> PolyQ:
    """Monic gcd; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(f: PolyQ) -> PolyQ:
    if f.is_zero():
        raise ZeroPolynomial("squarefree part of 0")
    if f.deg == 0:
        return PolyQ.const(1)
    return (f // poly_gcd_q(f, f.derivative())).monic()


def squarefree_decomposition(f: PolyQ) -> list[tuple[PolyQ, int]]:
    """Yun's algorithm: monic pairwise-coprime squarefree a_i with f = lc * prod a_i^i."""
    if f.is_zero():
        raise ZeroPolynomial("squarefree decomposition of 0")
    out = []
    if f.deg < 1:
        return out
    fp = f.derivative()
    a = poly_gcd_q(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    i = 1
    while b.deg > 0:
        a = poly_gcd_q(b, d)
        b = b // a
        c = d // a
        if a.deg > 0:
            out.append((a.monic(), i))
        i += 1
        d = c - b.derivative()
    return out


def resultant(a: PolyQ, b: PolyQ) -> Fraction:
    """Res(a, b) by the Euclidean remainder sequence (equals the Sylvester determinant)."""
    if a.is_zero() or b.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    acc = Fraction(1)
    while True:
        m, n = a.deg, b.deg
        if n == 0:
            return acc * b.lc ** m
        r = a % b
        if r.is_zero():
            return Fraction(0)
        if (m * n) % 2:
            acc = -acc
        acc *= b.lc ** (m - r.deg)
        a, b = b, r


def sylvester_matrix(a: PolyQ, b: PolyQ) -> list[list[Fraction]]:
    m, n = a.deg, b.deg
    size = m + n
    rows = []
    ra = list(reversed(a.coeffs))
    rb = list(reversed(b.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + ra + [Fraction(0)] * (size - m - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + rb + [Fraction(0)] * (size - n - 1 - i))
    return rows


def sylvester_resultant(a: PolyQ, b: PolyQ) -> Fraction:
    if a.is_zero() or b.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    if a.deg == 0 and b.deg == 0:
        return Fraction(1)
    return det(sylvester_matrix(a, b))


# ---------------------------------------------------------------- over F_p

def _pth_root(a: list, p: int) -> list:
    return [a[i] for i in range(0, len(a), p)]


def _sqf_fp(f: list, p: int) -> list[tuple[list, int]]:
    out = []
    d = [i * c % p for i, c in enumerate(f)][1:]
    while d and d[-1] == 0:
        d.pop()
    if not d:
        return [(g, m * p) for g, m in _sqf_fp(_pth_root(f, p), p)]
    c = fp_gcd(f, d, p)
    w = fp_divmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = fp_gcd(w, c, p)
        z = fp_divmod(w, y, p)[0]
        if len(z) > 1:
            out.append((fp_monic(z, p), i))
        i += 1
        w = y
        c = fp_divmod(c, y, p)[0]
    if len(c) > 1:
        out.extend((g, m * p) for g, m in _sqf_fp(_pth_root(c, p), p))
    return out


def _ddf(f: list, p: int) -> list[tuple[list, int]]:
    """Distinct-degree factorization of a monic squarefree f."""
    out = []
    h = [0, 1]
    i = 1
    rest = f
    while len(rest) - 1 >= 2 * i:
        h = fp_powmod(h, p, rest, p)
        g = fp_gcd(fp_sub(h, [0, 1], p), rest, p)
        if len(g) > 1:
            out.append((g, i))
            rest = fp_divmod(rest, g, p)[0]
            h = fp_divmod(h, rest, p)[1]
        i += 1
    if len(rest) > 1:
        out.append((rest, len(rest) - 1))
    return out


def _int_to_poly(c: int, p: int) -> list:
    out = []
    while c:
        c, r = divmod(c, p)
        out.append(r)
    return out


def _edf_split(g: list, a: list, d: int, p: int) -> list:
    if p == 2:
        # trace map a + a^2 + ... + a^(2^(d-1))
        t = a = fp_divmod(a, g, p)[1]
        for _ in range(d - 1):
            a = fp_divmod(fp_mul(a, a, p), g, p)[1]
            t = fp_add(t, a, p)
        b = t
    else:
        b = fp_sub(fp_powmod(a, (p ** d - 1) // 2, g, p), [1], p)
    return fp_gcd(b, g, p)


def _edf(g: list, d: int, p: int) -> list[list]:
    """Split a monic squarefree product of degree-d irreducibles into its factors."""
    n = len(g) - 1
    if n == d:
        return [g]
    rng = None
    c = p
    tries = 0
    while True:
        if tries < EDF_SWEEP_LIMIT:
            a = _int_to_poly(c, p)
            c += 1
            if len(a) - 1 >= n:
                c, tries = p, EDF_SWEEP_LIMIT
                continue
        else:
            if rng is None:
                rng = random.Random(EDF_SEED)
            a = [rng.randrange(p) for _ in range(n)]
            while a and a[-1] == 0:
                a.pop()
            if len(a) < 2:
                continue
        tries += 1
        u = _edf_split(g, a, d, p)
        if 0 < len(u) - 1 < n:
            v = fp_divmod(g, u, p)[0]
            return _edf(u, d, p) + _edf(fp_monic(v, p), d, p)


def _factor_monic_fp(f: list, p: int) -> list[tuple[list, int]]:
    out = []
    for part, mult in _sqf_fp(f, p):
        for g, d in _ddf(part, p):
            out.extend((h, mult) for h in _edf(g, d, p))
    return out


def factor_mod_p(f: PolyFp) -> list[tuple[PolyFp, int]]:
    """Monic irreducible factors with multiplicities; f = lc(f) * prod g^m.

    Sorted by degree, then by coefficients from the top down.
    """
    if f.is_zero():
        raise ZeroPolynomial("factorization of 0")
    p = f.p
    if f.deg == 0:
        return []
    merged: dict[tuple, int] = {}
    for g, m in _factor_monic_fp(fp_monic(list(f.coeffs), p), p):
        key = tuple(g)
        merged[key] = merged.get(key, 0) + m
    facs = [(PolyFp(p, k), m) for k, m in merged.items()]
    facs.sort(key=lambda fm: (fm[0], fm[1]))
    return facs


def _is_squarefree_fp(f: list, p: int) -> bool:
    d = [i * c % p for i, c in enumerate(f)][1:]
    while d and d[-1] == 0:
        d.pop()
    if not d:
        return len(f) <= 1
    return len(fp_gcd(f, d, p)) == 1


# ---------------------------------------------------------------- Hensel lifting

def _zmod(a: list, m: int) -> list:
    out = [c % m for c in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def _zmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _zadd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _zsub(a: list, b: list) -> list:
    return _zadd(a, [-c for c in b])


def _zdivmod_monic(a: list, b: list, m: int) -> tuple[list, list]:
    """Division by a monic b with all arithmetic mod m."""
    rem = [c % m for c in a]
    db = len(b) - 1
    if len(rem) <= db:
        return [], _zmod(rem, m)
    quot = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        q = rem[i] % m
        if q == 0:
            continue
        quot[i - db] = q
        for j, y in enumerate(b):
            rem[i - db + j] = (rem[i - db + j] - q * y) % m
    return _zmod(quot, m), _zmod(rem[:db], m)


def _hensel_step(f, g, h, s, t, m):
    """One quadratic step: f ≡ g h (mod m), s g + t h ≡ 1, h monic  ->  same mod m^2."""
    m2 = m * m
    e = _zmod(_zsub(f, _zmul(g, h)), m2)
    q, r = _zdivmod_monic(_zmul(s, e), h, m2)
    g2 = _zmod(_zadd(g, _zadd(_zmul(t, e), _zmul(q, g))), m2)
    h2 = _zmod(_zadd(h, r), m2)
    b = _zmod(_zsub(_zadd(_zmul(s, g2), _zmul(t, h2)), [1]), m2)
    c, d = _zdivmod_monic(_zmul(s, b), h2, m2)
    s2 = _zmod(_zsub(s, d), m2)
    t2 = _zmod(_zsub(t, _zadd(_zmul(t, b), _zmul(c, g2))), m2)
    return g2, h2, s2, t2


def _lift_tree(f: list, facs: list[list], p: int, k: int) -> list[list]:
    pk = p ** k
    if len(facs) == 1:
        inv = pow(f[-1], -1, pk)
        return [_zmod([c * inv for c in f], pk)]
    half = len(facs) // 2
    left, right = facs[:half], facs[half:]
    g = [f[-1] % p]
    for a in left:
        g = fp_mul(g, a, p)
    h = [1]
    for a in right:
        h = fp_mul(h, a, p)
    one, s, t = fp_xgcd(g, h, p)
    m = p
    while m < pk:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    g, h = _zmod(g, pk), _zmod(h, pk)
    return _lift_tree(g, left, p, k) + _lift_tree(h, right, p, k)


def hensel_lift(f: PolyQ | list, factors: list[PolyFp], p: int, k: int) -> list[list[int]]:
    """Lift a factorization of f mod p to one mod p^k.

    f must have integer coefficients. Returns monic integer coefficient lists
    reduced into [0, p^k) with lc(f) * prod(g) ≡ f (mod p^k).
    """
    ints = list(f) if isinstance(f, list) else _as_int_poly(f)
    if not ints:
        raise ZeroPolynomial("Hensel lifting of 0")
    if ints[-1] % p == 0:
        raise ValueError("leading coefficient vanishes mod p")
    fbar = fp_monic(_zmod(ints, p), p)
    if not _is_squarefree_fp(fbar, p):
        raise NotSquarefreeModP(f"f is not squarefree modulo {p}")
    facs = [fp_monic(list(g.coeffs), p) for g in factors]
    for i in range(len(facs)):
        for j in range(i + 1, len(facs)):
            if len(fp_gcd(facs[i], facs[j], p)) > 1:
                raise NotCoprime(f"factors {i} and {j} share a factor mod {p}")
    prod = [1]
    for a in facs:
        prod = fp_mul(prod, a, p)
    if prod != fbar:
        raise ValueError("factors do not multiply to f modulo p")
    return _lift_tree(ints, facs, p, k)


def _as_int_poly(f: PolyQ) -> list[int]:
    if any(c.denominator != 1 for c in f.coeffs):
        raise ValueError("Hensel lifting needs integer coefficients")
    return [int(c) for c in f.coeffs]


# ---------------------------------------------------------------- Zassenhaus

def _symmetric(a: list, m: int) -> list:
    half = m // 2
    out = [(c % m) - m if (c % m) > half else c % m for c in a]
    while out and out[-1] == 0:
        out.pop()
    return out


def _primitive(a: list) -> list:
    from math import gcd

    g = 0
    for c in a:
        g = gcd(g, c)
    out = [c // g for c in a]
    if out[-1] < 0:
        out = [-c for c in out]
    return out


def _zdiv_exact(a: list, b: list) -> list | None:
    """a / b over Z, or None if b does not divide a."""
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return None
    quot = [0] * (len(rem) - db)
    lb = b[-1]
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q, r = divmod(c, lb)
        if r:
            return None
        quot[i - db] = q
        for j, y in enumerate(b):
            rem[i - db + j] -= q * y
    if any(rem[:db]):
        return None
    return quot


def _mignotte_bound(f: list) -> int:
    norm2 = isqrt(sum(c * c for c in f)) + 1
    return abs(f[-1]) * (2 ** (len(f) - 1)) * norm2


def _primes_from(start: int):
    n = start
    while True:
        if n > 1 and all(n % q for q in range(2, isqrt(n) + 1)):
            yield n
        n += 1


def _subset_degrees(degs: list[int]) -> set[int]:
    sums = {0}
    for d in degs:
        sums |= {s + d for s in sums}
    return sums


def choose_prime(f: list) -> tuple[int, list[list], set[int]]:
    """Among the first admissible primes p >= 3, pick the one with fewest modular factors.

    Admissible: p does not divide lc(f) and f is squarefree mod p. Ties go to the
    smaller prime, so the choice is deterministic. Also returns the degrees a
    rational factor can have, intersected over every prime examined.
    f must be squarefree over Q; otherwise no prime is admissible.
    """
    best = None
    seen = rejected = 0
    allowed = None
    for p in _primes_from(3):
        if f[-1] % p == 0:
            continue
        fbar = fp_monic(_zmod(f, p), p)
        if len(fbar) != len(f) or not _is_squarefree_fp(fbar, p):
            rejected += 1
            # a squarefree f has only finitely many bad primes; check once it looks stuck
            if rejected == 50 and squarefree_part(PolyQ(f)).deg != len(f) - 1:
                raise ValueError("choose_prime needs a squarefree polynomial")
            continue
        facs = [g for g, _ in _factor_monic_fp(fbar, p)]
        sums = _subset_degrees([len(g) - 1 for g in facs])
        allowed = sums if allowed is None else allowed & sums
        if best is None or len(facs) < len(best[1]):
            best = (p, facs)
        seen += 1
        if seen >= PRIME_TRIALS or len(facs) == 1 or len(allowed) == 2:
            break
    return best[0], best[1], allowed


def _zassenhaus(f: list) -> list[list]:
    """Irreducible factors over Z of a primitive squarefree f with positive lc."""
    n = len(f) - 1
    if n <= 1:
        return [f]
    p, modular, allowed = choose_prime(f)
    if len(modular) == 1 or allowed == {0, n}:
        return [f]
    bound = 2 * _mignotte_bound(f)
    k = 1
    while p ** k <= bound:
        k += 1
    pk = p ** k
    lifted = _lift_tree(f, modular, p, k)

    result = []
    F = f
    facs = lifted
    s = 1
    while 2 * s <= len(facs):
        found = None
        a = F[-1]
        total = len(F) - 1
        for combo in combinations(range(len(facs)), s):
            dsum = sum(len(facs[i]) - 1 for i in combo)
            if dsum not in allowed or (total - dsum) not in allowed:
                continue
            if F[0] != 0:
                c0 = a
                for i in combo:
                    c0 = c0 * facs[i][0] % pk
                c0 = c0 - pk if c0 > pk // 2 else c0
                if c0 == 0 or (a * F[0]) % c0:
                    continue
            g = [a]
            for i in combo:
                g = _zmod(_zmul(g, facs[i]), pk)
            g = _primitive(_symmetric(g, pk))
            q = _zdiv_exact(F, g)
            if q is not None:
                found = (combo, g, q)
                break
        if found is None:
            s += 1
            continue
        combo, g, q = found
        result.append(g)
        F = q if q[-1] > 0 else [-c for c in q]
        facs = [h for i, h in enumerate(facs) if i not in combo]
    if len(F) > 1:
        result.append(F)
    return result


def _poly_key(g: PolyQ):
    return (g.deg, tuple(reversed(g.coeffs)))


def factor_q(f: PolyQ) -> list[PolyQ]:
    """Monic irreducible factors over Q, repeated by multiplicity; f = lc(f) * prod."""
    if f.is_zero():
        raise ZeroPolynomial("factorization of 0")
    out = []
    for part, mult in squarefree_decomposition(f):
        _, ints = part.content_primitive()
        for g in _zassenhaus(ints):
            out.extend([PolyQ(g).monic()] * mult)
    out.sort(key=_poly_key)
    return out


def is_irreducible_q(f: PolyQ) -> bool:
    if f.deg < 1:
        return False
    facs = factor_q(f)
    return len(facs) == 1
