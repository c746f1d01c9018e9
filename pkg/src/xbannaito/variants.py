"""Alternative annihilators ``F = (1/chi)(R - I + f1) + (1/chit)(TR - I + f2)``.

For a seed ``phi = xi p`` the cleared functions are

    chi_v  = p - ratio_R p(-x) - f1 p
    chit_v = ratio_TR p(-x-1) - p + f2 p

and ``Ft = xi F`` is rational.  The intertwined operator is solved from the
``RTR``, ``T`` and ``TR`` coefficients of ``Ft H = G Ft``; the ``R`` and ``I``
coefficients are then a consistency check.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bannai_ito import BIParams, bi_eigenvalue, bi_operator, solve_bi_polynomial
from .darboux import SeedData
from .dunkl import I, R, RTR, T, TR, DunklOperator, conjugate, op_equal
from .errors import IdentityFailed
from .exact import Poly, RatFunc, as_ratfunc

CASES = ("5.2", "5.5", "5.6", "5.7")


@dataclass(frozen=True)
class VariantSpec:
    case: str
    f1: RatFunc
    f2: RatFunc

    def constant(self, p: BIParams) -> RatFunc:
        """``alpha f1 + beta f2``."""
        return p.alpha() * self.f1 + p.beta() * self.f2


def variant_spec(case: str, p: BIParams) -> VariantSpec:
    a, b = p.alpha(), p.beta()
    g1 = (a.reflect() + a) / a
    g2 = (b.substitute(-1, -1) + b) / b
    zero = RatFunc.const(0)
    table = {"5.2": (zero, g2), "5.5": (zero, zero), "5.6": (g1, zero), "5.7": (g1, g2)}
    if case not in table:
        raise ValueError(f"unknown case {case!r}; expected one of {CASES}")
    return VariantSpec(case, *table[case])


def custom_spec(f1, f2) -> VariantSpec:
    return VariantSpec("custom", as_ratfunc(f1), as_ratfunc(f2))


def cleared_chis(v: VariantSpec, seed: SeedData):
    g = seed.gauge
    p = RatFunc(seed.p)
    chi = p - g.ratio_R * p.reflect() - v.f1 * p
    chit = g.ratio_TR * p.substitute(-1, -1) - p + v.f2 * p
    return chi, chit


def variant_transform(v: VariantSpec, seed: SeedData) -> DunklOperator:
    chi, chit = cleared_chis(v, seed)
    if not chi or not chit:
        raise IdentityFailed(f"case {v.case}: a denominator of F vanishes identically")
    return chi.inverse() * (R - I + v.f1) + chit.inverse() * (TR - I + v.f2)


def variant_operator(v: VariantSpec, seed: SeedData) -> DunklOperator:
    """Cleared ``xi H^(1) xi^{-1}`` with ``Ft H = H^(1) Ft``."""
    F = variant_transform(v, seed)
    lhs = F @ bi_operator(seed.params)
    fr, ftr, fi = F.coeff(-1, 0), F.coeff(-1, -1), F.coeff(1, 0)
    u = lhs.coeff(1, -1) / ftr.reflect()
    w_coef = lhs.coeff(1, 1) / fr.substitute(-1, -1)
    w = (lhs.coeff(-1, -1) - w_coef * fi.substitute(-1, -1)) / ftr
    G = u * R + w_coef * TR + DunklOperator.mult(w)
    if not op_equal(lhs, G @ F):
        raise IdentityFailed(f"case {v.case}: the R and I coefficient equations are inconsistent")
    return G


def operator_coefficients(G: DunklOperator):
    """``(alpha1, beta1, gamma1)`` of ``G = alpha1(R - I) + beta1(TR - I) + gamma1``."""
    a1, b1 = G.coeff(-1, 0), G.coeff(-1, -1)
    return a1, b1, G.coeff(1, 0) + a1 + b1


@lru_cache(maxsize=None)
def _family_normalizer(v: VariantSpec, seed: SeedData, n_max: int) -> RatFunc:
    F = variant_transform(v, seed)
    den = Poly.const(1)
    for n in range(n_max + 1):
        f = F.apply(solve_bi_polynomial(n, seed.params))
        den = den * f.den // den.gcd(f.den)
    return RatFunc(den)


def variant_xbi(v: VariantSpec, seed: SeedData, n: int, n_max: int = 8) -> Poly:
    """``Ft[B_n]`` times the family's common denominator (fixed for ``n <= n_max``)."""
    F = variant_transform(v, seed)
    f = _family_normalizer(v, seed, max(n, n_max)) * F.apply(solve_bi_polynomial(n, seed.params))
    if not f.is_polynomial():
        raise IdentityFailed(f"case {v.case}: normalized eigenfunction is not a polynomial")
    return f.as_poly()


def variant_exceptional_operator(v: VariantSpec, seed: SeedData, n_max: int = 8):
    return conjugate(variant_operator(v, seed), _family_normalizer(v, seed, n_max))


def proportional(a: Poly, b: Poly) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return a * b.lead == b * a.lead
