"""Bannai-Ito operator, eigenvalues, monic eigenpolynomials, grid and weight."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .dunkl import I, R, TR, DunklOperator
from .errors import (DegenerateSpectrum, NonSimpleRoots, PropagationPole,
                     TruncationViolated, ZeroDenominator)
from .exact import Poly, Q, RatFunc, is_integer

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class BIParams:
    """The four parameters ``rho1, rho2, r1, r2`` (exact rationals)."""

    rho1: Fraction
    rho2: Fraction
    r1: Fraction
    r2: Fraction

    def __post_init__(self):
        for name in ("rho1", "rho2", "r1", "r2"):
            object.__setattr__(self, name, Q(getattr(self, name)))

    @classmethod
    def from_cli(cls, text: str) -> BIParams:
        """Parse the CLI order ``r1,r2,rho1,rho2``."""
        parts = [s for s in text.split(",")]
        if len(parts) != 4:
            raise ValueError(f"expected 4 comma-separated rationals, got {text!r}")
        r1, r2, rho1, rho2 = (Q(s.strip()) for s in parts)
        return cls(rho1, rho2, r1, r2)

    def as_tuple(self):
        return (self.rho1, self.rho2, self.r1, self.r2)

    def replace(self, **kw) -> BIParams:
        vals = {"rho1": self.rho1, "rho2": self.rho2, "r1": self.r1, "r2": self.r2}
        vals.update(kw)
        return BIParams(**vals)

    @property
    def alpha_const(self) -> Fraction:
        """``alpha(x) + alpha(-x)``, equal to ``rho1 + rho2``."""
        return self.rho1 + self.rho2

    @property
    def beta_const(self) -> Fraction:
        """``-(beta(x) + beta(-x-1))``, equal to ``r1 + r2``."""
        return self.r1 + self.r2

    def alpha(self) -> RatFunc:
        return _alpha(self.rho1, self.rho2)

    def beta(self) -> RatFunc:
        return _beta(self.r1, self.r2)

    def to_json(self):
        return {k: f"{v.numerator}/{v.denominator}" for k, v in
                (("rho1", self.rho1), ("rho2", self.rho2), ("r1", self.r1), ("r2", self.r2))}


DEFAULT_PARAMS = BIParams(Fraction(1, 3), Fraction(1, 5), Fraction(1, 7), Fraction(1, 11))


@lru_cache(maxsize=None)
def _alpha(rho1, rho2) -> RatFunc:
    return RatFunc(Poly.from_roots([rho1, rho2]), Poly((0, -2)))


@lru_cache(maxsize=None)
def _beta(r1, r2) -> RatFunc:
    return RatFunc(Poly.from_roots([r1 - HALF, r2 - HALF]), Poly((1, 2)))


def dunkl_shift(a, b, c=0) -> DunklOperator:
    """``a(x)(R - I) + b(x)(TR - I) + c(x)``."""
    return a * (R - I) + b * (TR - I) + DunklOperator.mult(c)


@lru_cache(maxsize=None)
def bi_operator(p: BIParams) -> DunklOperator:
    return dunkl_shift(p.alpha(), p.beta())


def bi_eigenvalue(n: int, p: BIParams) -> Fraction:
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if n % 2 == 0:
        return Fraction(n, 2)
    return p.r1 + p.r2 - p.rho1 - p.rho2 - Fraction(n + 1, 2)


@dataclass
class ValidationReport:
    params: BIParams
    n_max: int
    violations: list = field(default_factory=list)
    truncation: str | None = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json(self):
        return {"params": self.params.to_json(), "n_max": self.n_max,
                "violations": list(self.violations), "truncation": self.truncation,
                "ok": self.ok}


def validate_genericity(p: BIParams, n_max: int = 12, ignore=()) -> ValidationReport:
    """Report every non-generic coincidence among the parameters.

    Checks the non-integrality conditions that keep the leading coefficients
    of the exceptional polynomials nonzero, plus distinctness of
    ``lambda_0..lambda_{n_max}``.  Names in ``ignore`` are skipped, which is
    how a deliberately imposed truncation relation is exempted.
    """
    rho1, rho2, r1, r2 = p.rho1, p.rho2, p.r1, p.r2
    rep = ValidationReport(p, n_max)
    checks = {
        "r1+r2": r1 + r2,
        "rho1+rho2": rho1 + rho2,
        "r1+r2+rho1+rho2": r1 + r2 + rho1 + rho2,
        "r1+r2-rho1-rho2": r1 + r2 - rho1 - rho2,
        "(r1-r2-rho1+rho2+1)/2": (r1 - r2 - rho1 + rho2 + 1) / 2,
        "(r1-r2+rho1-rho2+1)/2": (r1 - r2 + rho1 - rho2 + 1) / 2,
    }
    for i, ri in (("1", r1), ("2", r2)):
        for j, rhoj in (("1", rho1), ("2", rho2)):
            checks[f"r{i}-rho{j}+1/2"] = ri - rhoj + HALF
            checks[f"r{i}+rho{j}+1/2"] = ri + rhoj + HALF
    for name, value in checks.items():
        if name not in ignore and is_integer(value):
            rep.violations.append(f"{name} = {value} is an integer")
    seen = {}
    for k in range(n_max + 1):
        lam = bi_eigenvalue(k, p)
        if lam in seen and "lambda" not in ignore:
            rep.violations.append(f"lambda_{seen[lam]} = lambda_{k} = {lam}")
        else:
            seen[lam] = k
    diff = r2 - rho2
    if diff > 0 and is_integer(2 * diff) and (2 * diff) % 2 == 1:
        rep.truncation = f"odd: r2 = rho2 + {2 * diff}/2"
    elif rho1 + rho2 < 0 and is_integer(-2 * (rho1 + rho2)) and (-2 * (rho1 + rho2)) % 2 == 0:
        rep.truncation = f"even: rho1 = -rho2 - {-2 * (rho1 + rho2)}/2"
    return rep


@lru_cache(maxsize=None)
def _monomial_images(p: BIParams, n: int):
    """Columns ``H[x^k]`` for ``k <= n`` as polynomials."""
    H = bi_operator(p)
    cols = []
    for k in range(n + 1):
        img = H.apply(Poly.monomial(k))
        if not img.is_polynomial():
            raise ArithmeticError(f"H[x^{k}] is not a polynomial: {img}")
        poly = img.num
        if poly.degree > k:
            raise ArithmeticError(f"H raises the degree of x^{k}")
        cols.append(poly)
    return tuple(cols)


@lru_cache(maxsize=None)
def solve_bi_polynomial(n: int, p: BIParams) -> Poly:
    """Monic degree-``n`` solution of ``H[B] = lambda_n B`` by back substitution."""
    lam = bi_eigenvalue(n, p)
    cols = _monomial_images(p, n)
    for k in range(n):
        if cols[k].coeff(k) == lam:
            raise DegenerateSpectrum(f"lambda_{k} = lambda_{n} = {lam}")
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    for j in range(n - 1, -1, -1):
        s = sum((c[k] * cols[k].coeff(j) for k in range(j + 1, n + 1)), Fraction(0))
        c[j] = -s / (cols[j].coeff(j) - lam)
    return Poly(c)


def grid_point(s: int, rho2) -> Fraction:
    """``x_s = -1/4 + (-1)^s (rho2 + s/2 + 1/4)``."""
    sign = 1 if s % 2 == 0 else -1
    return Fraction(-1, 4) + sign * (Q(rho2) + Fraction(s, 2) + Fraction(1, 4))


@dataclass(frozen=True)
class BIGrid:
    N: int
    mode: str
    points: tuple
    rho2: Fraction

    def point(self, s: int) -> Fraction:
        """Grid formula at any ``s``, including ones past the truncation."""
        return grid_point(s, self.rho2)

    def to_json(self):
        return {"N": self.N, "mode": self.mode,
                "points": [f"{x.numerator}/{x.denominator}" for x in self.points]}


def truncation_holds(N: int, p: BIParams, mode: str) -> bool:
    if mode == "odd":
        return N % 2 == 1 and p.r2 == p.rho2 + Fraction(N, 2)
    if mode == "even":
        return N % 2 == 0 and p.rho1 == -p.rho2 - Fraction(N, 2)
    raise ValueError(f"unknown truncation mode {mode!r}")


def truncate(p: BIParams, N: int) -> BIParams:
    """Impose ``r2 = rho2 + N/2`` (N odd) or ``rho1 = -rho2 - N/2`` (N even)."""
    if N % 2:
        return p.replace(r2=p.rho2 + Fraction(N, 2))
    return p.replace(rho1=-p.rho2 - Fraction(N, 2))


def bi_grid(N: int, p: BIParams, mode: str | None = None, check_roots=True) -> BIGrid:
    if N < 1:
        raise ValueError("grid size must be positive")
    mode = mode or ("odd" if N % 2 else "even")
    if not truncation_holds(N, p, mode):
        raise TruncationViolated(f"parameters do not satisfy the {mode} truncation for N={N}")
    pts = tuple(grid_point(s, p.rho2) for s in range(N))
    if len(set(pts)) != N:
        raise NonSimpleRoots("grid points collide")
    if check_roots:
        BN = solve_bi_polynomial(N, p)
        bad = [x for x in pts if BN(x) != 0]
        if bad:
            raise NonSimpleRoots(f"B_{N} does not vanish at {bad}")
    return BIGrid(N, mode, pts, p.rho2)


@dataclass(frozen=True)
class WeightTable:
    grid: BIGrid
    values: tuple


def _value(f: RatFunc, x, what):
    try:
        v = f(x)
    except ZeroDenominator:
        raise PropagationPole(f"{what} has a pole at x = {x}") from None
    if v == 0:
        raise PropagationPole(f"{what} vanishes at x = {x}")
    return v


def bi_weight(grid: BIGrid, p: BIParams) -> WeightTable:
    """On-grid weight with ``w(x_0) = 1``, propagated through the pairings
    ``x_{s+1} = -x_s - 1`` (s even, via beta) and ``x_{s+1} = -x_s`` (s odd, via alpha)."""
    a, b = p.alpha(), p.beta()
    vals = [Fraction(1)]
    for s in range(grid.N - 1):
        x0, x1 = grid.points[s], grid.points[s + 1]
        f = b if s % 2 == 0 else a
        name = "beta" if s % 2 == 0 else "alpha"
        vals.append(vals[-1] * _value(f, x0, name) / _value(f, x1, name))
    return WeightTable(grid, tuple(vals))
