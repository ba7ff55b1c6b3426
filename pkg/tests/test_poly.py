from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boolat.errors import ParseError
from boolat.polycore import PolyFp, PolyQ, parse_poly, poly_from_json, poly_to_json

P = parse_poly

rats = st.fractions(min_value=-20, max_value=20, max_denominator=6)
polys = st.lists(rats, max_size=6).map(PolyQ)


def test_trim_and_degree():
    assert PolyQ([1, 2, 0, 0]).deg == 1
    assert PolyQ([]).deg == -1
    assert PolyQ([0, 0]).is_zero()


def test_arithmetic_basics():
    f = P("X^2 - 1")
    assert f * P("X + 1") == P("X^3 + X^2 - X - 1")
    q, r = divmod(P("X^3 + 2"), P("X - 1"))
    assert q == P("X^2 + X + 1") and r == PolyQ.const(3)
    assert f(3) == 8
    assert f.derivative() == P("2*X")
    assert f.shift(1) == P("X^2 + 2*X")
    assert f.compose(P("X^2")) == P("X^4 - 1")


def test_coefficients_stay_reduced():
    f = P("2/4*X + 6/8")
    assert f.coeffs == (Fraction(3, 4), Fraction(1, 2))
    assert all(c.denominator > 0 for c in f.coeffs)


def test_content_primitive():
    c, ints = P("1/2*X^2 - 3/4").content_primitive()
    assert ints == [-3, 0, 2]
    assert c == Fraction(1, 4)


@settings(max_examples=100, deadline=None)
@given(polys, polys)
def test_divmod_identity(a, b):
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.deg < b.deg


@settings(max_examples=100, deadline=None)
@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)


def test_polyfp_reduces():
    f = PolyFp(5, [7, -1, 5])
    assert f.coeffs == (2, 4)
    assert (f * f).coeffs == (4, 1, 1)
    assert PolyFp.from_polyq(P("1/2*X + 1"), 3).coeffs == (1, 2)


# ---------------------------------------------------------------- parsing

@pytest.mark.parametrize("text, coeffs", [
    ("X^6 - 2", [-2, 0, 0, 0, 0, 0, 1]),
    ("1/2*X^2 + X - 3", [-3, 1, Fraction(1, 2)]),
    ("  x^2+1 ", [1, 0, 1]),
    ("3X", [0, 3]),
    ("-(X - 1)^2", [-1, 2, -1]),
    ("X^4 - 10*X^2 + 1", [1, 0, -10, 0, 1]),
    ("7", [7]),
])
def test_parse(text, coeffs):
    assert parse_poly(text) == PolyQ(coeffs)


@pytest.mark.parametrize("bad", ["", "X^", "X^-1", "2*", "X + + ", "(X", "X)", "X/X", "Y^2", "X^2 $ 1", "1/0"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_poly(bad)


@settings(max_examples=100, deadline=None)
@given(polys)
def test_str_parse_round_trip(f):
    assert parse_poly(str(f)) == f


@settings(max_examples=100, deadline=None)
@given(polys)
def test_json_round_trip(f):
    text = poly_to_json(f)
    assert poly_from_json(text) == f


def test_json_form_is_canonical():
    assert poly_to_json(P("1/2*X^2 - 3")) == '["-3", "0", "1/2"]'
    with pytest.raises(ParseError):
        poly_from_json('{"a": 1}')
    with pytest.raises(ParseError):
        poly_from_json("[1, 2]")
