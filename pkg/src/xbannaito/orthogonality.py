"""Exceptional grids, weights, Gram matrices and weight positivity.

The weight of the exceptional family is ``M(x) * w(x)`` with the rational
multiplier ``M = x^2 alpha / (eta chi_hat chit_hat)`` and ``w`` the classical
weight.  Values are propagated point to point along the window with reduced
ratio functions, so removable ``0/0`` forms at window edges never arise.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .bannai_ito import (HALF, BIGrid, BIParams, bi_eigenvalue, bi_grid, bi_weight,
                         grid_point, solve_bi_polynomial, truncate, validate_genericity)
from .darboux import SeedData, build_seed, exceptional_operator, xbi_polynomial, is_zero_index
from .errors import (MultiplierPole, OrthogonalityFailed, RootCheckFailed, SignMismatch,
                     XBIError, ZeroDenominator)
from .exact import X, Poly, RatFunc

_ODD_WINDOWS = {1: (1, -1), 5: (1, -1), 2: (0, 0), 6: (0, 0),
                3: (0, -1), 7: (0, -1), 4: (1, 0), 8: (1, 0)}
_EVEN_WINDOWS = {1: (1, -2), 4: (1, -2), 2: (0, -1), 3: (0, -1),
                 5: (1, -1), 8: (1, -1), 6: (0, -2), 7: (0, -2)}


def window_indices(d: int, N: int) -> range:
    """Grid indices ``s`` of the exceptional window for class ``d``."""
    lo, hi = (_ODD_WINDOWS if N % 2 else _EVEN_WINDOWS)[d]
    return range(lo, N + hi + 1)


@dataclass(frozen=True)
class ExceptionalGrid:
    base: BIGrid
    d: int
    index_window: range
    points: tuple

    @property
    def N(self) -> int:
        return self.base.N

    def to_json(self):
        return {"N": self.N, "d": self.d, "indices": list(self.index_window),
                "points": [f"{x.numerator}/{x.denominator}" for x in self.points]}


def exceptional_grid(seed: SeedData, N: int, check_roots: bool = True) -> ExceptionalGrid:
    p = seed.params
    base = bi_grid(N, p)
    win = window_indices(seed.idx.d, N)
    pts = tuple(grid_point(s, p.rho2) for s in win)
    if check_roots:
        top = xbi_polynomial(seed, N)
        bad = [x for x in pts if top(x) != 0]
        if bad:
            raise RootCheckFailed(f"B^(1)_N of seed {seed.idx} does not vanish at {bad}")
        deriv = _derivative(top)
        rep = [x for x in pts if deriv(x) == 0]
        if rep:
            raise RootCheckFailed(f"window points {rep} are repeated roots")
    return ExceptionalGrid(base, seed.idx.d, win, pts)


def _derivative(poly: Poly) -> Poly:
    return Poly([k * c for k, c in enumerate(poly.coeffs)][1:])


# -- weight ------------------------------------------------------------------

def weight_multiplier(seed: SeedData) -> RatFunc:
    """``M(x) = x^2 alpha(x) / (eta chi_hat chit_hat)``."""
    eta = RatFunc(seed.gauge.eta)
    return RatFunc(X * X) * seed.params.alpha() / (eta * seed.chi_hat * seed.chitilde_hat)


def weight_ratios(seed: SeedData):
    """Reduced ``w_hat(-x-1)/w_hat(x)`` and ``w_hat(-x)/w_hat(x)``."""
    p = seed.params
    M = weight_multiplier(seed)
    a, b = p.alpha(), p.beta()
    q_tr = M.substitute(-1, -1) * b / (M * b.substitute(-1, -1))
    q_r = M.reflect() * a / (M * a.reflect())
    return q_tr, q_r


def symmetry_ratios(seed: SeedData):
    """The same two ratios read off the coefficients of ``Hhat^(1)``."""
    Hh = exceptional_operator(seed)
    F, G = Hh.coeff(-1, 0), Hh.coeff(-1, -1)
    return G / G.substitute(-1, -1), F / F.reflect()


def _eval(f: RatFunc, x, what):
    try:
        v = f(x)
    except ZeroDenominator:
        raise MultiplierPole(f"{what} has a pole at x = {x}") from None
    if v == 0:
        raise MultiplierPole(f"{what} vanishes at x = {x}")
    return v


def exceptional_weight(seed: SeedData, grid: ExceptionalGrid) -> tuple:
    """``w_hat(x_s)`` on the window with ``c(x) = 1``."""
    q_tr, q_r = weight_ratios(seed)
    start = grid.index_window[0]
    classical = bi_weight(grid.base, seed.params).values
    x0 = grid.points[0]
    vals = [_eval(weight_multiplier(seed), x0, "weight multiplier") * classical[start]]
    for k, s in enumerate(grid.index_window[:-1]):
        x = grid.points[k]
        q = q_tr if s % 2 == 0 else q_r
        vals.append(vals[-1] * _eval(q, x, "weight ratio"))
    return tuple(vals)


def boundary_conditions(seed: SeedData, grid: ExceptionalGrid) -> dict:
    """Coefficient vanishing at window points whose partner leaves the window."""
    Hh = exceptional_operator(seed)
    F, G = Hh.coeff(-1, 0), Hh.coeff(-1, -1)
    pts = set(grid.points)
    out = {}
    for x in grid.points:
        if -x not in pts:
            out[f"F({x})=0"] = _safe(F, x) == 0
        if -x - 1 not in pts:
            out[f"G({x})=0"] = _safe(G, x) == 0
    return out


def _safe(f, x):
    try:
        return f(x)
    except ZeroDenominator:
        return None


# -- Gram ------------------------------------------------------------------------

@dataclass
class GramReport:
    grid: ExceptionalGrid
    indices: list
    weights: tuple
    gram: list
    norms: dict = field(default_factory=dict)
    positivity: list = field(default_factory=list)

    @property
    def off_diagonal(self):
        return [(self.indices[i], self.indices[j]) for i in range(len(self.indices))
                for j in range(len(self.indices)) if i != j and self.gram[i][j] != 0]

    @property
    def zero_norms(self):
        return [n for n, h in self.norms.items() if h == 0]

    @property
    def ok(self) -> bool:
        return not self.off_diagonal and not self.zero_norms

    def to_json(self):
        f = lambda q: f"{q.numerator}/{q.denominator}"
        return {"grid": self.grid.to_json(), "indices": self.indices,
                "weights": [f(w) for w in self.weights],
                "gram": [[f(v) for v in row] for row in self.gram],
                "norms": {str(n): f(h) for n, h in self.norms.items()},
                "positivity": self.positivity, "ok": self.ok}


def gram_matrix(seed: SeedData, grid: ExceptionalGrid, weights=None, n_max=None,
                strict: bool = True) -> GramReport:
    if weights is None:
        weights = exceptional_weight(seed, grid)
    n_max = grid.N - 1 if n_max is None else n_max
    idx = [n for n in range(n_max + 1) if not is_zero_index(seed, n)]
    vals = {n: [xbi_polynomial(seed, n)(x) for x in grid.points] for n in idx}
    gram = [[sum((w * a * b for w, a, b in zip(weights, vals[n], vals[m])), Fraction(0))
             for m in idx] for n in idx]
    rep = GramReport(grid, idx, tuple(weights), gram,
                     {n: gram[i][i] for i, n in enumerate(idx)},
                     ["+" if w > 0 else "-" for w in weights])
    if strict and not rep.ok:
        raise OrthogonalityFailed(f"seed {seed.idx}, N={grid.N}: off-diagonal "
                                  f"{rep.off_diagonal}, zero norms {rep.zero_norms}")
    return rep


def norm_law_factor(seed: SeedData, n: int) -> Fraction:
    """``(lambda_n - mu)(lambda_n - beta)``; exceptional norms are this times the
    classical norm, up to one constant per family."""
    lam = bi_eigenvalue(n, seed.params)
    return (lam - seed.mu) * (lam - seed.params.beta_const)


def predicted_null_indices(seed: SeedData, indices) -> list:
    """Indices whose exceptional polynomial must have zero norm on the window."""
    return [n for n in indices if norm_law_factor(seed, n) == 0]


def classical_norms(N: int, p: BIParams) -> dict:
    grid = bi_grid(N, p)
    w = bi_weight(grid, p).values
    return {n: sum((wi * solve_bi_polynomial(n, p)(x) ** 2 for wi, x in zip(w, grid.points)),
                   Fraction(0)) for n in range(N)}


def norm_ratio_closed_form(n: int, N: int, p: BIParams) -> Fraction:
    """Closed-form ``h_n / h_{n-1}`` for the class-3 degree-1 seed, N odd."""
    rho1, rho2, r1 = p.rho1, p.rho2, p.r1
    if n % 2 == 0:
        num = -n * (2 * r1 + 2 * rho2 + N - n) ** 2 * (2 * r1 - 2 * rho1 + N - n) \
            * (2 * r1 + 2 * rho2 + N - n - 2)
        den = 8 * (2 * r1 - 2 * rho1 + N - 2 * n) ** 2 * (rho1 + rho2 + Fraction(n, 2) - 1)
        return num / den
    num = 2 * (N - n) * (2 * r1 - 2 * rho1 - n) * (2 * r1 - 2 * rho2 - n) \
        * (rho1 + rho2 + Fraction(n - 1, 2)) * (rho1 + rho2 + Fraction(n + 1, 2)) \
        * (rho1 - rho2 - Fraction(N - n, 2))
    den = (2 * r1 - 2 * rho1 + N - 2 * n) ** 2 * (2 * r1 + 2 * rho2 + N - n + 1) \
        * (2 * r1 + 2 * rho2 + N - n - 1)
    return num / den


# -- positivity ---------------------------------------------------------------

def e_factors(seed: SeedData):
    """``(E1, E2, E3)`` as rational functions."""
    p = seed.params
    eta = RatFunc(seed.gauge.eta)
    E1 = RatFunc(X) * p.alpha() / eta
    E2 = RatFunc(seed.chi_hat) / X
    return E1, E2, seed.chitilde_hat


def e_closed_form(d: int, N: int, p: BIParams) -> RatFunc:
    """Tabulated ``E_{d,1}(x)`` for odd ``N`` with ``r2 = rho2 + N/2``."""
    rho1, rho2, r1 = p.rho1, p.rho2, p.r1
    x = X
    lin = lambda c: x - c
    if d == 1:
        D = 2 * r1 - 2 * rho1 + N - 2
        c = ((rho1 + HALF) * (rho2 + HALF) - (rho1 + rho2 + 1) * r1) / D * N \
            + (rho2 * (2 * rho2 + 1) * (2 * rho1 + 1)
               - r1 * (2 * rho2 * (2 * rho2 + 1) - (2 * rho1 + 1))) / (2 * D)
        return RatFunc(lin(rho1) * lin(rho2) * (lin(-HALF) ** 2 + c))
    if d == 2:
        D = 2 * r1 - 2 * rho1 + N + 2
        c = (rho1 * rho2 - (r1 + HALF) * (rho1 + rho2)) / D * N \
            + (rho1 * (2 * rho2 * (2 * rho2 + 1) - (2 * r1 + 1))
               - rho2 * (2 * rho2 + 1) * (2 * r1 + 1)) / (2 * D)
        return RatFunc(lin(-r1 - HALF) * lin(-rho2 - Fraction(N + 1, 2)) * (x * x + c))
    if d == 3:
        D = 2 * r1 + 2 * rho1 + 4 * rho2 + N - 2
        c1 = (rho1 * rho2 + (r1 - HALF) * (rho1 + rho2)) / D * N \
            + (rho1 * ((4 * rho2 - 1) * (rho2 + 2 * r1 - 1) - rho2)
               + rho2 * (2 * rho2 - 1) * (2 * r1 - 1)) / (2 * D)
        c2 = ((rho1 - HALF) * (rho2 - HALF) + r1 * (rho1 + rho2 - 1)) / D * N \
            + (r1 * ((4 * rho2 - 1) * (rho2 + 2 * rho1 - 1) - rho2)
               + rho2 * (2 * rho2 - 1) * (2 * rho1 - 1)) / (2 * D)
        return RatFunc((x * x + c1) * (lin(-HALF) ** 2 + c2))
    if d == 4:
        return RatFunc(lin(rho1) * lin(rho2) * lin(-r1 - HALF) * lin(-rho2 - Fraction(N + 1, 2)))
    if d == 5:
        k = Fraction(N - 1) * (2 * rho1 + 2 * rho2 + N - 1) ** 2 * (2 * r1 - 2 * rho1 + 1) \
            / (4 * (2 * rho1 - 2 * r1 + N - 2) ** 2)
        return RatFunc(lin(rho2) * lin(-r1 - HALF) * k)
    if d == 6:
        k = Fraction(N + 1) * (2 * r1 + 2 * rho2 - 1) ** 2 * (2 * r1 - 2 * rho1 - 1) \
            / (4 * (2 * rho1 - 2 * r1 + N + 2) ** 2)
        return RatFunc(lin(rho1) * lin(-rho2 - Fraction(N + 1, 2)) * k)
    if d == 7:
        k = (4 * rho2 + N - 1) ** 2 * (2 * r1 - 2 * rho2 + 1) * (2 * rho2 - 2 * rho1 + N - 1) \
            / (4 * (4 * rho2 - 2 * rho1 - 2 * r1 + N - 2) ** 2)
        return RatFunc(lin(rho1) * lin(-r1 - HALF) * k)
    k = (2 * r1 + 2 * rho1 - 1) ** 2 * (2 * r1 - 2 * rho2 - 1) * (2 * rho2 - 2 * rho1 + N + 1) \
        / (4 * (4 * rho2 - 2 * rho1 - 2 * r1 + N + 2) ** 2)
    return RatFunc(lin(rho2) * lin(-rho2 - Fraction(N + 1, 2)) * k)


def in_sufficient_region(d: int, N: int, p: BIParams) -> bool:
    rho1, rho2, r1 = p.rho1, p.rho2, p.r1
    if d == 1:
        return 0 < r1 < (rho1 + HALF) * (rho2 + HALF) / (rho1 + rho2 + 1) \
            and -HALF < rho1 < rho2 + 1 and rho2 > -HALF
    if d == 2:
        return Fraction(N - 3, 2) < r1 < Fraction(N - 2, 2) and rho1 < 0 \
            and -HALF < rho2 < r1 - Fraction(N - 2, 2)
    if d == 3:
        return r1 > HALF and rho1 > HALF and rho2 > HALF
    if d == 4:
        return r1 > Fraction(N - 3, 2) and rho1 < HALF and rho2 > -HALF
    if d == 5:
        return -1 < r1 < 0 and rho1 < r1 + HALF and rho2 > -HALF
    if d == 6:
        return r1 > -Fraction(N - 3, 4) and rho1 < rho2 \
            and -Fraction(N + 1, 4) < rho2 < -Fraction(N - 1, 4)
    if d == 7:
        return r1 > 0 and -HALF < rho1 < rho2 and r1 - HALF < rho2 < r1 + HALF
    return r1 > rho2 + HALF and rho1 < rho2 + Fraction(N + 1, 2) \
        and -Fraction(N + 3, 4) < rho2 < -Fraction(N - 1, 4)


def _sign(q):
    return (q > 0) - (q < 0)


@dataclass
class PositivityReport:
    d: int
    N: int
    params: BIParams
    points: tuple
    E: list
    factors: list
    weights: tuple
    classical: list
    in_region: bool

    @property
    def all_positive(self) -> bool:
        return all(w > 0 for w in self.weights)

    @property
    def E_positive(self) -> bool:
        """E > 0 at every window point of the classical grid.  At ``x_N`` the
        factor E vanishes against a pole of the classical weight, so that point
        carries no sign information from E."""
        return all(e > 0 for e, c in zip(self.E, self.classical) if c is not None)

    @property
    def classical_positive(self) -> bool:
        return all(c > 0 for c in self.classical if c is not None)

    def to_json(self):
        f = lambda q: None if q is None else f"{q.numerator}/{q.denominator}"
        return {"d": self.d, "N": self.N, "params": self.params.to_json(),
                "points": [f(x) for x in self.points], "E": [f(e) for e in self.E],
                "factors": [[f(v) for v in t] for t in self.factors],
                "weights": [f(w) for w in self.weights],
                "classical": [f(w) for w in self.classical],
                "in_region": self.in_region, "all_positive": self.all_positive}


def positivity_scan(d: int, N: int, p: BIParams) -> PositivityReport:
    """Weight signs on the window for the degree-1 seed of class ``d`` (N odd)."""
    if N % 2 == 0:
        raise ValueError("tabulated E forms cover odd N only")
    seed = build_seed((d, 1), p)
    grid = exceptional_grid(seed, N)
    weights = exceptional_weight(seed, grid)
    closed = e_closed_form(d, N, p)
    E1, E2, E3 = e_factors(seed)
    classical = list(bi_weight(grid.base, p).values) + [None]
    E, factors, cl = [], [], []
    for x, s, w in zip(grid.points, grid.index_window, weights):
        e = closed(x)
        E.append(e)
        factors.append((E1(x), E2(x), E3(x)))
        wc = classical[s]
        cl.append(wc)
        if _sign(e) != _sign(E1(x) * E2(x) * E3(x)):
            raise SignMismatch(f"E_{d},1({x}) and E1*E2*E3 disagree in sign")
        if wc is not None and _sign(w) != _sign(e) * _sign(wc):
            raise SignMismatch(f"weight sign at {x} differs from sign(E) * sign(w)")
    return PositivityReport(d, N, p, grid.points, E, factors, weights, cl,
                            in_sufficient_region(d, N, p))


def truncation_exemptions(N: int):
    """Genericity checks that the truncation at ``N`` violates on purpose."""
    return ("r2-rho2+1/2", "lambda") if N % 2 else ("rho1+rho2", "lambda")


def _rand(rng, lo, hi, den=997):
    """Random rational strictly inside ``(lo, hi)``."""
    lo, hi = Fraction(lo), Fraction(hi)
    k = rng.randint(1, den - 1)
    return lo + (hi - lo) * Fraction(k, den)


def sample_region(d: int, N: int, rng: random.Random, span=3) -> BIParams:
    """One random point of the sufficient region (bounded by ``span``), truncated at N."""
    R = lambda lo, hi: _rand(rng, lo, hi)
    if d == 1:
        rho2 = R(-HALF, span)
        rho1 = R(-HALF, rho2 + 1)
        r1 = R(0, (rho1 + HALF) * (rho2 + HALF) / (rho1 + rho2 + 1))
    elif d == 2:
        r1 = R(Fraction(N - 3, 2), Fraction(N - 2, 2))
        rho1 = R(-span, 0)
        rho2 = R(-HALF, r1 - Fraction(N - 2, 2))
    elif d == 3:
        r1, rho1, rho2 = R(HALF, span), R(HALF, span), R(HALF, span)
    elif d == 4:
        r1 = R(Fraction(N - 3, 2), Fraction(N - 3, 2) + span)
        rho1, rho2 = R(-span, HALF), R(-HALF, span)
    elif d == 5:
        r1 = R(-1, 0)
        rho1, rho2 = R(r1 + HALF - span, r1 + HALF), R(-HALF, span)
    elif d == 6:
        rho2 = R(-Fraction(N + 1, 4), -Fraction(N - 1, 4))
        r1 = R(-Fraction(N - 3, 4), -Fraction(N - 3, 4) + span)
        rho1 = R(rho2 - span, rho2)
    elif d == 7:
        r1 = R(0, span)
        rho2 = R(max(r1 - HALF, -HALF), r1 + HALF)
        rho1 = R(-HALF, rho2)
    else:
        rho2 = R(-Fraction(N + 3, 4), -Fraction(N - 1, 4))
        r1 = R(rho2 + HALF, rho2 + HALF + span)
        rho1 = R(rho2 + Fraction(N + 1, 2) - span, rho2 + Fraction(N + 1, 2))
    return truncate(BIParams(rho1, rho2, r1, rho2), N)


def sample_positivity(d: int, N: int, samples: int, seed: int = 0, max_tries: int = 50):
    """Scan ``samples`` generic random points of the sufficient region."""
    rng = random.Random(seed)
    reports = []
    while len(reports) < samples:
        for _ in range(max_tries):
            p = sample_region(d, N, rng)
            if validate_genericity(p, N, ignore=truncation_exemptions(N)).ok:
                break
        else:
            raise XBIError(f"no generic sample found for d={d}")
        reports.append(positivity_scan(d, N, p))
    return reports
