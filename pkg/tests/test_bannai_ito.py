from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from xbannaito import (BIParams, bi_eigenvalue, bi_grid, bi_operator, bi_weight,
                       solve_bi_polynomial, truncate, validate_genericity)
from xbannaito.bannai_ito import grid_point
from xbannaito.errors import DegenerateSpectrum, NonSimpleRoots, TruncationViolated
from xbannaito.exact import Poly, RatFunc

from conftest import PARAM_SETS

x = sp.Symbol("x")


def sym(q):
    return sp.Rational(q.numerator, q.denominator)


def sympy_bi(n, p):
    """Oracle: solve H[B] = lambda B for a monic B with sympy."""
    rho1, rho2, r1, r2 = map(sym, p.as_tuple())
    a = (x - rho1) * (x - rho2) / (-2 * x)
    b = (x - r1 + sp.Rational(1, 2)) * (x - r2 + sp.Rational(1, 2)) / (2 * x + 1)
    cs = sp.symbols(f"c0:{n}")
    B = x**n + sum(c * x**i for i, c in enumerate(cs))
    HB = a * (B.subs(x, -x) - B) + b * (B.subs(x, -x - 1) - B)
    lam = sym(bi_eigenvalue(n, p))
    num = sp.numer(sp.together(HB - lam * B))
    sol = sp.solve(sp.Poly(num, x).all_coeffs(), cs, dict=True)[0]
    return sp.Poly(B.subs(sol), x)


def test_eigenvalue_examples(P):
    assert bi_eigenvalue(0, P) == 0
    assert bi_eigenvalue(2, P) == 1
    assert bi_eigenvalue(1, P) == Fraction(-1501, 1155)


def test_coefficient_identities(params):
    a, b = params.alpha(), params.beta()
    assert a + a.reflect() == RatFunc.const(params.rho1 + params.rho2)
    assert b.reflect() + b.substitute(1, -1) - b - b.substitute(-1, -1) == RatFunc.const(0)
    assert bi_operator(params).apply(1).is_zero()


@pytest.mark.parametrize("n", range(13))
def test_eigen_residual_is_zero(params, n):
    B = solve_bi_polynomial(n, params)
    assert B.degree == n and B.lead == 1
    assert (bi_operator(params).apply(B) - bi_eigenvalue(n, params) * RatFunc(B)).is_zero()


@pytest.mark.parametrize("n", [1, 2, 4, 5])
def test_matches_sympy_oracle(n):
    p = PARAM_SETS[0]
    ours = solve_bi_polynomial(n, p)
    ref = sympy_bi(n, p).all_coeffs()[::-1]
    assert list(ours.coeffs) == [Fraction(str(c)) for c in ref]


def test_perturbed_coefficient_breaks_eigen_equation(P):
    B = solve_bi_polynomial(5, P)
    H = bi_operator(P)
    for i in range(5):
        bad = B + Poly.monomial(i, Fraction(1, 7))
        assert not (H.apply(bad) - bi_eigenvalue(5, P) * RatFunc(bad)).is_zero()


def test_degenerate_spectrum():
    # r1 + r2 - rho1 - rho2 = 1 makes lambda_1 = lambda_0
    p = BIParams(0, 0, Fraction(1, 2), Fraction(1, 2))
    assert bi_eigenvalue(1, p) == 0
    with pytest.raises(DegenerateSpectrum):
        solve_bi_polynomial(1, p)


def test_genericity(P):
    assert validate_genericity(P, 12).ok
    rep = validate_genericity(P.replace(r1=1 - P.r2))
    assert any(v.startswith("r1+r2 ") for v in rep.violations)
    t = validate_genericity(truncate(P, 7))
    assert not t.ok and t.truncation.startswith("odd")


def test_grid_points():
    assert [grid_point(s, Fraction(1, 5)) for s in range(3)] == [
        Fraction(1, 5), Fraction(-6, 5), Fraction(6, 5)]
    p = truncate(BIParams(Fraction(1, 3), 0, Fraction(1, 7), 0), 3)
    assert bi_grid(3, p).points == (0, -1, 1)


@pytest.mark.parametrize("N", [5, 6, 7, 8])
def test_grid_structure_and_roots(P, N):
    p = truncate(P, N)
    g = bi_grid(N, p)
    B = solve_bi_polynomial(N, p)
    assert all(B(v) == 0 for v in g.points)
    for s in range(N - 1):
        expect = -g.points[s] - (1 if s % 2 == 0 else 0)
        assert g.points[s + 1] == expect


def test_grid_preconditions(P):
    with pytest.raises(TruncationViolated):
        bi_grid(7, P)
    with pytest.raises(TruncationViolated):
        bi_grid(7, truncate(P, 7), "even")
    # rho2 = -1/2 folds x_1 = -rho2 - 1 onto x_0
    with pytest.raises(NonSimpleRoots):
        bi_grid(3, truncate(P.replace(rho2=Fraction(-1, 2)), 3))


@pytest.mark.parametrize("N", [6, 7])
def test_weight_symmetry_and_classical_orthogonality(params, N):
    p = truncate(params, N)
    g = bi_grid(N, p)
    w = bi_weight(g, p).values
    assert w[0] == 1
    a = p.alpha()
    for s in range(1, N - 1, 2):
        assert w[s] * a(g.points[s]) == w[s + 1] * a(g.points[s + 1])
    vals = [[solve_bi_polynomial(n, p)(v) for v in g.points] for n in range(N)]
    for n in range(N):
        for m in range(N):
            h = sum(wi * u * v for wi, u, v in zip(w, vals[n], vals[m]))
            assert (h == 0) == (n != m)


@settings(max_examples=15)
@given(st.fractions(-3, 3, max_denominator=9), st.fractions(-3, 3, max_denominator=9))
def test_operator_is_symmetric_on_grid(rho1, rho2):
    p = truncate(BIParams(rho1, rho2, Fraction(2, 7), 0), 5)
    try:
        g = bi_grid(5, p, check_roots=False)
        w = bi_weight(g, p).values
    except Exception:
        return
    H = bi_operator(p)
    f, h = Poly([1, 2, 0, 1]), Poly([0, -1, 3])
    try:
        Hf, Hh = H.apply(f), H.apply(h)
        lhs = sum(wi * Hf(v) * h(v) for wi, v in zip(w, g.points))
        rhs = sum(wi * f(v) * Hh(v) for wi, v in zip(w, g.points))
    except ZeroDivisionError:
        return
    assert lhs == rhs
