"""The eight gauge classes of quasi-polynomial eigenfunctions ``xi_d(x) p(x)``.

A gauge factor is never evaluated; a class carries only the two rational
ratios ``xi(-x)/xi(x)`` and ``xi(-x-1)/xi(x)``, the minimal polynomial
``eta_d`` realizing the first one, the permuted parameters ``sigma_d`` and
the eigenvalue shift ``C_d``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .bannai_ito import HALF, BIParams, bi_eigenvalue, bi_operator, solve_bi_polynomial
from .dunkl import DunklOperator, GaugeRatios, conjugate_by_gauge, op_equal
from .errors import ConjugationMismatch, ParityMismatch
from .exact import Poly, RatFunc

GAUGE_CLASSES = tuple(range(1, 9))

# sign pattern applied to (rho1, rho2, r1, r2)
_SIGMA_SIGNS = {
    1: (1, 1, 1, 1),
    2: (-1, -1, -1, -1),
    3: (-1, -1, 1, 1),
    4: (1, 1, -1, -1),
    5: (-1, 1, -1, 1),
    6: (1, -1, 1, -1),
    7: (1, -1, -1, 1),
    8: (-1, 1, 1, -1),
}

# which of rho1, rho2 are roots of eta_d
_ETA_ROOTS = {1: (), 2: ("rho1", "rho2"), 3: ("rho1", "rho2"), 4: (),
              5: ("rho1",), 6: ("rho2",), 7: ("rho2",), 8: ("rho1",)}


@dataclass(frozen=True)
class SeedIndex:
    d: int
    m: int

    def __post_init__(self):
        if self.d not in GAUGE_CLASSES:
            raise ValueError(f"gauge class must be in 1..8, got {self.d}")
        if self.m < 0:
            raise ValueError("seed degree must be nonnegative")

    def __iter__(self):
        return iter((self.d, self.m))

    def __str__(self):
        return f"({self.d},{self.m})"


def as_index(idx) -> SeedIndex:
    return idx if isinstance(idx, SeedIndex) else SeedIndex(*idx)


def sigma(d: int, p: BIParams) -> BIParams:
    s = _SIGMA_SIGNS[d]
    return BIParams(s[0] * p.rho1, s[1] * p.rho2, s[2] * p.r1, s[3] * p.r2)


@dataclass(frozen=True)
class GaugeClass:
    d: int
    params: BIParams
    sigma: BIParams
    eta: Poly
    ratio_R: RatFunc
    ratio_TR: RatFunc
    C: Fraction
    sign: int

    @property
    def kappa(self) -> int:
        return self.eta.degree

    @property
    def gauge(self) -> GaugeRatios:
        return _gauge_ratios(self.ratio_R, self.ratio_TR)

    def to_json(self):
        return {"d": self.d, "sigma": self.sigma.to_json(), "eta": self.eta.to_json(),
                "ratio_R": self.ratio_R.to_json(), "ratio_TR": self.ratio_TR.to_json(),
                "C": f"{self.C.numerator}/{self.C.denominator}", "sign": self.sign,
                "kappa": self.kappa}


@lru_cache(maxsize=None)
def _gauge_ratios(rr, rt):
    return GaugeRatios(rr, rt)


@lru_cache(maxsize=None)
def gauge_class(d: int, p: BIParams) -> GaugeClass:
    if d not in GAUGE_CLASSES:
        raise ValueError(f"gauge class must be in 1..8, got {d}")
    s = sigma(d, p)
    sign = 1 if d <= 4 else -1
    rho_den = Poly.from_roots([p.rho1, p.rho2])
    r_den = Poly.from_roots([p.r1 - HALF, p.r2 - HALF])
    ratio_R = RatFunc(Poly.from_roots([s.rho1, s.rho2]) * sign, rho_den)
    ratio_TR = RatFunc(Poly.from_roots([s.r1 - HALF, s.r2 - HALF]) * sign, r_den)
    eta = Poly.from_roots([getattr(p, name) for name in _ETA_ROOTS[d]])
    if sign == 1:
        C = -(p.rho1 + p.rho2 - s.rho1 - s.rho2) / 2 + (p.r1 + p.r2 - s.r1 - s.r2) / 2
    else:
        C = -(p.rho1 + p.rho2 + s.rho1 + s.rho2) / 2 + (p.r1 + p.r2 + s.r1 + s.r2 - 1) / 2
    return GaugeClass(d, p, s, eta, ratio_R, ratio_TR, C, sign)


def seed_polynomial(idx: SeedIndex, p: BIParams) -> Poly:
    """Polynomial part ``B_m(x; sigma_d)`` of the seed."""
    idx = as_index(idx)
    return solve_bi_polynomial(idx.m, sigma(idx.d, p))


def seed_eigenvalue(idx: SeedIndex, p: BIParams) -> Fraction:
    idx = as_index(idx)
    g = gauge_class(idx.d, p)
    return g.sign * bi_eigenvalue(idx.m, g.sigma) + g.C


def gauge_constant_term(d: int, p: BIParams) -> RatFunc:
    """``alpha(x)(ratio_R - 1) + beta(x)(ratio_TR - 1)``; constant for every class."""
    g = gauge_class(d, p)
    return p.alpha() * (g.ratio_R - 1) + p.beta() * (g.ratio_TR - 1)


@lru_cache(maxsize=None)
def conjugated_operator(d: int, p: BIParams) -> DunklOperator:
    """``xi_d^{-1} H xi_d``, checked against ``sign*H(sigma_d) + C_d``."""
    g = gauge_class(d, p)
    conj = conjugate_by_gauge(bi_operator(p), g.gauge, inverse=True)
    expected = g.sign * bi_operator(g.sigma) + DunklOperator.mult(g.C)
    if not op_equal(conj, expected):
        raise ConjugationMismatch(f"xi^-1 H xi != {g.sign:+d} H(sigma_{d}) + C_{d}")
    return conj


def _sub_leading(poly: Poly, k: int) -> Fraction:
    """Coefficient of ``x^(deg-1)`` of a monic polynomial of degree ``k``."""
    return poly.coeff(k - 1) if k >= 1 else Fraction(0)


def degree_coefficients(idx: SeedIndex, n: int, p: BIParams) -> dict:
    """First-principles values of ``mu - beta``, ``lambda_n - mu`` and ``C_{d,m,n}``."""
    idx = as_index(idx)
    d, m = idx
    g = gauge_class(d, p)
    beta = p.beta_const
    mu = seed_eigenvalue(idx, p)
    lam = bi_eigenvalue(n, p)
    a_m = _sub_leading(seed_polynomial(idx, p), m)
    b_k = _sub_leading(g.eta, g.kappa)
    a_n = _sub_leading(solve_bi_polynomial(n, p), n)
    return {"mu-beta": mu - beta, "lambda-mu": lam - mu,
            "C": (lam - beta) * (a_m + b_k) - (mu - beta) * a_n}


def _closed_mu_minus_beta(d, m, p):
    rho1, rho2, r1, r2 = p.as_tuple()
    h = Fraction(m, 2)
    return {1: h - r1 - r2, 2: h - rho1 - rho2, 3: h - r1 - r2 - rho1 - rho2, 4: h,
            5: h - r2 - rho1, 6: h - r1 - rho2, 7: h - r2 - rho2, 8: h - r1 - rho1}[d]


def _closed_lambda_minus_mu(d, m, n, p):
    rho1, rho2, r1, r2 = p.as_tuple()
    h = Fraction(m - n, 2)
    return {1: h, 2: r1 + r2 - rho1 - rho2 + h, 3: -rho1 - rho2 + h, 4: r1 + r2 + h,
            5: r1 - rho1 + h, 6: r2 - rho2 + h, 7: r1 - rho2 + h, 8: r2 - rho1 + h}[d]


def _closed_C(d, m, n, p):
    rho1, rho2, r1, r2 = p.as_tuple()
    hm, hn, hmn = Fraction(m, 2), Fraction(n, 2), Fraction(m - n, 2)
    s = r1 + r2 - rho1 - rho2
    tail = (r1 + r2 - hn) * s
    den_n = s - n
    if d == 1:
        return -(r1 + r2 - hm) * hmn * tail / ((s - m) * den_n)
    if d == 2:
        return (rho1 + rho2 - hm) * (s + hmn) * tail / ((s + m) * den_n)
    if d == 3:
        return (r1 + r2 + rho1 + rho2 - hm) * (rho1 + rho2 - hmn) * tail / (
            (r1 + r2 + rho1 + rho2 - m) * den_n)
    if d == 4:
        return (-hm) * (r1 + r2 + hmn) * tail / ((r1 + r2 + rho1 + rho2 + m) * den_n)
    if d == 5:
        return (r2 + rho1 - hm) * (r1 - rho1 + hmn) * tail / ((r1 - r2 - rho1 + rho2 + m) * den_n)
    if d == 6:
        return -(r1 + rho2 - hm) * (r2 - rho2 + hmn) * tail / ((r1 - r2 - rho1 + rho2 - m) * den_n)
    if d == 7:
        return (r2 + rho2 - hm) * (r1 - rho2 + hmn) * tail / ((r1 - r2 + rho1 - rho2 + m) * den_n)
    return -(r1 + rho1 - hm) * (r2 - rho1 + hmn) * tail / ((r1 - r2 + rho1 - rho2 - m) * den_n)


def appendix_cases(d: int, m: int, n: int):
    """Names of the tabulated closed forms that apply to ``(d, m, n)``."""
    low = d <= 4
    cases = []
    if (low and m % 2 == 0) or (not low and m % 2 == 1):
        cases.append("mu-beta")
        if n % 2 == 0:
            cases.append("C")
    if n % 2 == 1 and ((low and m % 2 == 1) or (not low and m % 2 == 0)):
        cases.append("lambda-mu")
    return cases


def appendix_a_coefficients(idx: SeedIndex, n: int, p: BIParams):
    """``(mu - beta, lambda_n - mu, C_{d,m,n})`` plus the closed-form comparison.

    Returns ``(triple, checks)`` where ``checks`` maps each applicable closed
    form to ``(computed, closed)``.  Raises ParityMismatch when no tabulated
    case covers ``(d, m, n)``.
    """
    idx = as_index(idx)
    d, m = idx
    cases = appendix_cases(d, m, n)
    if not cases:
        raise ParityMismatch(f"no tabulated case for d={d}, m={m}, n={n}")
    vals = degree_coefficients(idx, n, p)
    closed = {"mu-beta": lambda: _closed_mu_minus_beta(d, m, p),
              "lambda-mu": lambda: _closed_lambda_minus_mu(d, m, n, p),
              "C": lambda: _closed_C(d, m, n, p)}
    checks = {c: (vals[c], closed[c]()) for c in cases}
    return (vals["mu-beta"], vals["lambda-mu"], vals["C"]), checks
