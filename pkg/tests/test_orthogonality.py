import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from xbannaito import DEFAULT_PARAMS, BIParams, build_seed, truncate, xbi_polynomial
from xbannaito.darboux import exceptional_operator
from xbannaito.errors import OrthogonalityFailed, TruncationViolated
from xbannaito.exact import Poly
from xbannaito.gauge import GAUGE_CLASSES
from xbannaito.orthogonality import (boundary_conditions, classical_norms, e_closed_form,
                                     e_factors, exceptional_grid, exceptional_weight,
                                     gram_matrix, in_sufficient_region, norm_law_factor,
                                     norm_ratio_closed_form, positivity_scan,
                                     predicted_null_indices, sample_positivity, sample_region,
                                     symmetry_ratios, weight_ratios, window_indices)

from conftest import PARAM_SETS, polys


def window(d, N):
    w = window_indices(d, N)
    return w[0], w[-1]


def test_window_table():
    assert window(3, 7) == (0, 6)
    assert window(2, 7) == (0, 7)
    assert window(6, 7) == (0, 7)
    assert window(1, 6) == (1, 4)
    assert window(4, 6) == (1, 4)


def test_grid_needs_truncation():
    with pytest.raises(TruncationViolated):
        exceptional_grid(build_seed((3, 1), DEFAULT_PARAMS), 7)


@pytest.mark.parametrize("N", [6, 7])
@pytest.mark.parametrize("d", GAUGE_CLASSES)
def test_window_points_are_simple_roots(N, d):
    seed = build_seed((d, 1), truncate(DEFAULT_PARAMS, N))
    g = exceptional_grid(seed, N)
    top = xbi_polynomial(seed, N)
    assert all(top(x) == 0 for x in g.points)


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("d", GAUGE_CLASSES)
def test_weight_ratios_match_operator_coefficients(P, d, m):
    seed = build_seed((d, m), P)
    assert weight_ratios(seed) == symmetry_ratios(seed)


@pytest.mark.parametrize("N", [6, 7])
@pytest.mark.parametrize("d", GAUGE_CLASSES)
@settings(max_examples=4)
@given(f=polys(3), h=polys(3))
def test_operator_symmetric_under_weight(N, d, f, h):
    """Independent of the eigenpolynomials: <Hf, h> = <f, Hh> on the window."""
    seed = build_seed((d, 1), truncate(DEFAULT_PARAMS, N))
    g = exceptional_grid(seed, N)
    w = exceptional_weight(seed, g)
    H = exceptional_operator(seed)
    Hf, Hh = H.apply(f), H.apply(h)
    lhs = sum(wi * Hf(x) * h(x) for wi, x in zip(w, g.points))
    rhs = sum(wi * f(x) * Hh(x) for wi, x in zip(w, g.points))
    assert lhs == rhs
    assert all(boundary_conditions(seed, g).values())


@pytest.mark.parametrize("d", GAUGE_CLASSES)
@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("N", [5, 6, 7])
def test_gram_off_diagonal_vanishes(d, m, N):
    seed = build_seed((d, m), truncate(DEFAULT_PARAMS, N))
    g = exceptional_grid(seed, N)
    rep = gram_matrix(seed, g, strict=False)
    assert rep.off_diagonal == []
    assert rep.zero_norms == predicted_null_indices(seed, rep.indices)


def test_gram_strict_raises_on_null_norm():
    seed = build_seed((1, 1), truncate(DEFAULT_PARAMS, 6))
    with pytest.raises(OrthogonalityFailed):
        gram_matrix(seed, exceptional_grid(seed, 6))


def test_gram_diagonal_by_direct_summation():
    seed = build_seed((3, 1), truncate(DEFAULT_PARAMS, 7))
    g = exceptional_grid(seed, 7)
    w = exceptional_weight(seed, g)
    rep = gram_matrix(seed, g, w)
    B0 = xbi_polynomial(seed, 0)
    assert rep.norms[0] == sum(wi * B0(x) ** 2 for wi, x in zip(w, g.points))


@pytest.mark.parametrize("p", PARAM_SETS[:2], ids=["p0", "p1"])
@pytest.mark.parametrize("d", [2, 3, 5, 8])
def test_norm_law(p, d):
    """Exceptional norms are (lambda_n - mu)(lambda_n - beta) times classical ones."""
    N = 7
    q = truncate(p, N)
    seed = build_seed((d, 1), q)
    rep = gram_matrix(seed, exceptional_grid(seed, N), strict=False)
    cl = classical_norms(N, q)
    ratios = {n: rep.norms[n] / (norm_law_factor(seed, n) * cl[n])
              for n in rep.indices if norm_law_factor(seed, n)}
    assert len(set(ratios.values())) == 1


@pytest.mark.parametrize("p", PARAM_SETS[:2], ids=["p0", "p1"])
def test_norm_ratios_closed_form(p):
    N = 7
    q = truncate(p, N)
    seed = build_seed((3, 1), q)
    h = gram_matrix(seed, exceptional_grid(seed, N)).norms
    for n in range(1, 7):
        assert h[n] / h[n - 1] == norm_ratio_closed_form(n, N, q)


@pytest.mark.parametrize("d", GAUGE_CLASSES)
def test_e_closed_forms_equal_factor_product(d):
    q = truncate(DEFAULT_PARAMS, 7)
    E1, E2, E3 = e_factors(build_seed((d, 1), q))
    assert E1 * E2 * E3 == e_closed_form(d, 7, q)


def test_e4_closed_form():
    q = truncate(DEFAULT_PARAMS, 5)
    x = Poly.x()
    expect = (x - q.rho1) * (x - q.rho2) * (x + q.r1 + Fraction(1, 2)) * (x + q.rho2 + 3)
    assert e_closed_form(4, 5, q).as_poly() == expect


def test_positivity_scan_even_n_rejected():
    with pytest.raises(ValueError):
        positivity_scan(3, 6, DEFAULT_PARAMS)


@pytest.mark.parametrize("d", GAUGE_CLASSES)
def test_samples_lie_in_region(d):
    rng = random.Random(d)
    for _ in range(20):
        assert in_sufficient_region(d, 7, sample_region(d, 7, rng))


def test_class_3_region_example():
    q = truncate(BIParams(Fraction(3, 4), Fraction(5, 7), Fraction(2, 3), 0), 7)
    assert in_sufficient_region(3, 7, q)
    rep = positivity_scan(3, 7, q)
    assert rep.E_positive


@pytest.mark.parametrize("d", GAUGE_CLASSES)
def test_sign_decomposition_on_samples(d):
    # positivity_scan raises SignMismatch on any disagreement
    reps = sample_positivity(d, 7, 5, seed=11)
    assert len(reps) == 5
    for r in reps:
        assert r.to_json()["d"] == d
