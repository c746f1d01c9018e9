from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings

from xbannaito.errors import ParseError, ZeroDenominator
from xbannaito.exact import (X, Poly, RatFunc, format_rational, parse_rational, poly_reflect,
                             poly_shift, ratfunc_substitute)

from conftest import nonzero_polys, polys, ratfuncs, small_q

x = sp.Symbol("x")


def to_sympy(p: Poly):
    return sp.Integer(0) + sum(sp.Rational(c.numerator, c.denominator) * x**i
                               for i, c in enumerate(p.coeffs))


def rf_sympy(f: RatFunc):
    return to_sympy(f.num) / to_sympy(f.den)


# -- parsing -----------------------------------------------------------------

@pytest.mark.parametrize("text, value", [("-3/7", Fraction(-3, 7)), ("5", Fraction(5)),
                                         ("+2/4", Fraction(1, 2)), (" 0 ", Fraction(0))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1/0", "abc", "1/-2", "", "1.5", "2/"])
def test_parse_rejects(text):
    with pytest.raises(ParseError):
        parse_rational(text)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_rational("1/0")
    assert info.value.position == 2


@given(small_q)
def test_rational_round_trip(q):
    assert parse_rational(format_rational(q)) == q


# -- polynomials -------------------------------------------------------------

def test_reflect_examples():
    assert poly_reflect(Poly([1, 3, 1])) == Poly([1, -3, 1])
    assert poly_reflect(Poly([1])) == Poly([1])
    assert poly_reflect(X**3) == -(X**3)


def test_shift_examples():
    assert poly_shift(X**2, 1) == Poly([1, 2, 1])
    assert poly_shift(X, -1) == Poly([-1, 1])
    half = Fraction(1, 2)
    assert poly_shift(X**3 - X, half) == Poly([Fraction(-3, 8), Fraction(-1, 4), Fraction(3, 2), 1])


def test_zero_polynomial_has_no_trailing_zeros():
    assert Poly([0, 0, 0]).is_zero()
    assert Poly([1, 2, 0]).degree == 1


@given(polys())
def test_reflect_involution(p):
    assert p.reflect().reflect() == p


@given(polys(), small_q)
def test_shift_inverse(p, k):
    assert poly_shift(poly_shift(p, k), -k) == p


@settings(max_examples=60)
@given(polys(), polys())
def test_poly_ring_ops_match_sympy(a, b):
    assert sp.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0
    assert sp.expand(to_sympy(a + b) - to_sympy(a) - to_sympy(b)) == 0


@settings(max_examples=60)
@given(polys(5), nonzero_polys(3))
def test_divmod_identity(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@settings(max_examples=60)
@given(polys(4), nonzero_polys(3))
def test_gcd_matches_sympy(a, b):
    g = a.gcd(b)
    ref = sp.Poly(sp.gcd(to_sympy(a), to_sympy(b)), x).monic()
    assert sp.expand(to_sympy(g) - ref.as_expr()) == 0


@given(polys(), small_q)
def test_evaluation_matches_sympy(p, v):
    assert p(v) == Fraction(str(to_sympy(p).subs(x, sp.Rational(v.numerator, v.denominator))))


def test_poly_json_round_trip():
    p = Poly([Fraction(-1, 3), 0, 2])
    assert Poly.from_json(p.to_json()) == p


# -- rational functions ------------------------------------------------------

def test_normalization_cancels_common_factor():
    f = RatFunc(X**2 - 1, X - 1)
    assert f.is_polynomial() and f.as_poly() == X + 1


def test_denominator_is_monic():
    f = RatFunc(Poly([1]), Poly([2, 4]))
    assert f.den == Poly([Fraction(1, 2), 1])
    assert f.num == Poly([Fraction(1, 4)])


def test_zero_denominator():
    with pytest.raises(ZeroDenominator):
        RatFunc(X, Poly())
    with pytest.raises(ZeroDenominator):
        RatFunc(1, X)(0)


@pytest.mark.parametrize("f, sign, shift, expected", [
    (RatFunc(1, X), -1, 0, RatFunc(-1, X)),
    (RatFunc(1, 2 * X + 1), -1, -1, RatFunc(Fraction(-1, 2), X + Fraction(1, 2))),
    (RatFunc(X), 1, 1, RatFunc(X + 1)),
])
def test_substitute_examples(f, sign, shift, expected):
    assert ratfunc_substitute(f, sign, shift) == expected


@settings(max_examples=50)
@given(ratfuncs(), ratfuncs(), ratfuncs())
def test_field_distributivity(f, g, h):
    assert (f + g) * h == f * h + g * h


@settings(max_examples=50)
@given(ratfuncs(), ratfuncs())
def test_ratfunc_matches_sympy(f, g):
    ours = rf_sympy(f * g + f)
    assert sp.simplify(ours - (rf_sympy(f) * rf_sympy(g) + rf_sympy(f))) == 0


@given(ratfuncs())
def test_inverse(f):
    if f:
        assert f * f.inverse() == RatFunc.const(1)


@given(ratfuncs())
def test_ratfunc_json_round_trip(f):
    assert RatFunc.from_json(f.to_json()) == f
