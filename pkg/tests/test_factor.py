"""Factorization over F_p and Q, Hensel lifting, resultants, gcd."""
import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolat.errors import NotCoprime, NotSquarefreeModP, ZeroPolynomial
from boolat.polycore import (
    PolyFp,
    PolyQ,
    factor_mod_p,
    factor_q,
    hensel_lift,
    is_irreducible_q,
    parse_poly,
    poly_gcd_q,
    resultant,
    squarefree_decomposition,
    squarefree_part,
    sylvester_resultant,
)
from boolat.polycore.factor import choose_prime

P = parse_poly


# ---------------------------------------------------------------- oracles

def monic_polys(p, d):
    for tail in product(range(p), repeat=d):
        yield PolyFp(p, list(tail) + [1])


def trial_division_factor(f: PolyFp):
    """Peel off the smallest monic divisor repeatedly; it is irreducible by minimality."""
    out = {}
    f = f.monic()
    d = 1
    while f.deg > 0:
        if 2 * d > f.deg:
            out[f] = out.get(f, 0) + 1
            break
        for g in monic_polys(f.p, d):
            q, r = divmod(f, g)
            if r.is_zero():
                out[g] = out.get(g, 0) + 1
                f = q
                break
        else:
            d += 1
    return sorted(out.items())


def fp_product(p, factors):
    acc = PolyFp(p, [1])
    for g, e in factors:
        acc = acc * g ** e
    return acc


# ---------------------------------------------------------------- F_p

def test_factor_mod_p_examples():
    assert factor_mod_p(PolyFp(5, [1, 0, 1])) == [(PolyFp(5, [2, 1]), 1), (PolyFp(5, [3, 1]), 1)]
    assert factor_mod_p(PolyFp(3, [1, 0, 1])) == [(PolyFp(3, [1, 0, 1]), 1)]
    assert factor_mod_p(PolyFp(2, [0, 0, 1])) == [(PolyFp(2, [0, 1]), 2)]


def test_factor_mod_p_zero():
    with pytest.raises(ZeroPolynomial):
        factor_mod_p(PolyFp(3, []))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_factor_mod_p_matches_trial_division(p):
    rng = random.Random(p)
    for _ in range(60):
        d = rng.randint(1, 6)
        f = PolyFp(p, [rng.randrange(p) for _ in range(d)] + [rng.randrange(1, p)])
        got = factor_mod_p(f)
        assert got == trial_division_factor(f)
        assert fp_product(p, got) * f.lc == f


@settings(max_examples=80, deadline=None)
@given(st.sampled_from([2, 3, 5, 7]), st.lists(st.integers(0, 6), min_size=2, max_size=7))
def test_factor_mod_p_product_property(p, cs):
    f = PolyFp(p, cs)
    if f.deg < 1:
        return
    facs = factor_mod_p(f)
    assert fp_product(p, facs) * f.lc == f
    assert all(g.lc == 1 for g, _ in facs)


# ---------------------------------------------------------------- Hensel

def test_hensel_exact_factorization_lifts_to_itself():
    f = P("X^2 - 1")
    lifted = hensel_lift(f, [PolyFp(3, [2, 1]), PolyFp(3, [1, 1])], 3, 2)
    assert lifted == [[8, 1], [1, 1]]


def test_hensel_quadratic_example():
    # X^2 + X + 3 = X (X + 1) mod 3 lifts to (X + 3)(X + 7) mod 9
    f = P("X^2 + X + 3")
    lifted = hensel_lift(f, [PolyFp(3, [0, 1]), PolyFp(3, [1, 1])], 3, 2)
    assert lifted == [[3, 1], [7, 1]]


def test_hensel_rejects_square_image():
    with pytest.raises(NotSquarefreeModP):
        hensel_lift(P("X^2 + X + 7"), [PolyFp(3, [2, 1]), PolyFp(3, [2, 1])], 3, 2)
    with pytest.raises(NotSquarefreeModP):
        hensel_lift(P("X^2"), [PolyFp(2, [0, 1]), PolyFp(2, [0, 1])], 2, 3)


def test_hensel_rejects_non_coprime_factors():
    # f squarefree mod 3 but the claimed factors share X
    with pytest.raises(NotCoprime):
        hensel_lift(P("X^3 - X"), [PolyFp(3, [0, 1]), PolyFp(3, [0, 1])], 3, 2)


def test_hensel_lift_properties():
    rng = random.Random(7)
    for _ in range(20):
        f = P("X^5 - X + 1") + PolyQ([rng.randint(-3, 3), 0, rng.randint(-3, 3)])
        if squarefree_part(f).deg != f.deg:
            with pytest.raises(ValueError):
                choose_prime(f.content_primitive()[1])
            continue
        p, mods, _ = choose_prime(f.content_primitive()[1])
        k = 4
        lifted = hensel_lift(f, [PolyFp(p, g) for g in mods], p, k)
        m = p ** k
        prod = [1]
        for g in lifted:
            prod = [sum(prod[i] * g[j - i] for i in range(len(prod)) if 0 <= j - i < len(g)) % m
                    for j in range(len(prod) + len(g) - 1)]
        ints = f.content_primitive()[1]
        lc = ints[-1]
        assert prod == [(c * pow(lc, -1, m)) % m for c in ints]
        for g, g0 in zip(lifted, mods):
            assert [c % p for c in g] == list(g0)


# ---------------------------------------------------------------- Q

def test_factor_q_examples():
    assert factor_q(P("X^4 - 10*X^2 + 1")) == [P("X^4 - 10*X^2 + 1")]
    assert factor_q(P("X^6 - 2")) == [P("X^6 - 2")]
    assert factor_q(P("X^2 - 1")) == [P("X - 1"), P("X + 1")]


def test_factor_q_multiplicities_and_content():
    f = P("3*(X - 1)^2 * (X^2 + 1) * (X + 2)")
    facs = factor_q(f)
    assert facs == [P("X - 1"), P("X - 1"), P("X + 2"), P("X^2 + 1")]
    acc = PolyQ.const(f.lc)
    for g in facs:
        acc = acc * g
    assert acc == f


def test_factor_q_swinnerton_dyer_like():
    # irreducible over Q but splits into quadratics modulo every prime
    f = P("X^4 - 10*X^2 + 1")
    assert is_irreducible_q(f)
    g = P("X^8 - 40*X^6 + 352*X^4 - 960*X^2 + 576")
    assert is_irreducible_q(g)


def test_factor_q_zero():
    with pytest.raises(ZeroPolynomial):
        factor_q(PolyQ([]))


def _random_poly(rng, deg):
    cs = [rng.randint(-5, 5) for _ in range(deg)] + [rng.choice([-3, -2, -1, 1, 2, 3])]
    return PolyQ(cs)


def test_factor_q_random_products():
    rng = random.Random(20240601)
    for _ in range(100):
        f = _random_poly(rng, rng.randint(1, 5))
        g = _random_poly(rng, rng.randint(1, 5))
        h = f * g
        facs = factor_q(h)
        acc = PolyQ.const(h.lc)
        for q in facs:
            assert q.lc == 1
            acc = acc * q
        assert acc == h
        assert all(is_irreducible_q(q) for q in facs if q.deg <= 3)


# ---------------------------------------------------------------- gcd, resultants

def test_gcd_examples():
    assert poly_gcd_q(P("X^2 - 1"), P("X - 1")) == P("X - 1")
    assert poly_gcd_q(P("2*X^2 + 4"), PolyQ([])) == P("X^2 + 2")
    assert poly_gcd_q(P("X^6 - 2"), P("6*X^5")) == PolyQ.const(1)
    assert poly_gcd_q(PolyQ([]), PolyQ([])) == PolyQ([])


def test_squarefree_examples():
    assert squarefree_part(P("(X - 1)^2 * (X + 2)")) == P("(X - 1)*(X + 2)")
    assert squarefree_part(P("X^6 - 2")) == P("X^6 - 2")
    assert squarefree_part(P("X^4")) == P("X")
    with pytest.raises(ZeroPolynomial):
        squarefree_part(PolyQ([]))


def test_squarefree_decomposition_reassembles():
    f = P("(X - 1)^3 * (X + 1)^2 * (X^2 + 3)")
    dec = squarefree_decomposition(f)
    acc = PolyQ.const(1)
    for g, e in dec:
        acc = acc * g ** e
    assert acc == f.monic()
    assert [e for _, e in dec] == [1, 2, 3]


def test_resultant_examples():
    assert resultant(P("X - 1"), P("X + 1")) == 2
    assert resultant(P("X^2 - 2"), P("X^2 - 2")) == 0
    assert resultant(P("X^2 - 2"), P("X^2 - 3")) == 1
    with pytest.raises(ZeroPolynomial):
        resultant(PolyQ([]), P("X"))


small_polys = st.lists(st.integers(-4, 4), min_size=1, max_size=5).map(PolyQ).filter(lambda f: f.deg >= 0)


@settings(max_examples=120, deadline=None)
@given(small_polys, small_polys)
def test_resultant_matches_sylvester_determinant(a, b):
    assert resultant(a, b) == sylvester_resultant(a, b)


@settings(max_examples=120, deadline=None)
@given(small_polys, small_polys)
def test_resultant_zero_iff_common_factor(a, b):
    if a.deg < 1 or b.deg < 1:
        return
    assert (resultant(a, b) == 0) == (poly_gcd_q(a, b).deg >= 1)


@settings(max_examples=60, deadline=None)
@given(small_polys, small_polys)
def test_gcd_divides_and_is_monic(a, b):
    g = poly_gcd_q(a, b)
    if g.is_zero():
        assert a.is_zero() and b.is_zero()
        return
    assert g.lc == 1
    assert g.divides(a) and g.divides(b)
    assert all(isinstance(c, Fraction) for c in g.coeffs)
