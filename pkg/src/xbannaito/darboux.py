"""One-step Darboux transformation of the Bannai-Ito operator.

Every seed-dependent operator is stored in gauge-cleared form.  With the seed
``phi = xi * p`` and ``eta`` the class polynomial, the functions

    chi   = (xi/eta) * chi_hat,     chi_hat   = eta p - (eta p)(-x)
    chit  = xi * chit_hat,          chit_hat  = beta(-x-1) p + beta * ratio_TR * p(-x-1)

make ``Ft = xi o F_phi``, ``Bh = B_phi o xi^{-1}`` and ``H1bar = xi H^(1) xi^{-1}``
purely rational.  The decoupling coefficient is ``r = xi * chit_hat * chi_hat / x``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .bannai_ito import BIParams, bi_eigenvalue, bi_operator, solve_bi_polynomial
from .dunkl import I, R, TR, DunklOperator, conjugate, conjugate_by_gauge, op_equal
from .errors import DegreeTableMismatch, IdentityFailed, InadmissibleSeed
from .exact import X, Poly, RatFunc
from .gauge import (SeedIndex, as_index, degree_coefficients, gauge_class, seed_eigenvalue,
                    seed_polynomial)


class _Unsupported:
    """Marker for eigenfunctions that are not polynomials."""

    def __repr__(self):
        return "Unsupported"

    def __bool__(self):
        return False


Unsupported = _Unsupported()


@dataclass(frozen=True)
class SeedData:
    idx: SeedIndex
    params: BIParams
    p: Poly
    phi_hat: Poly
    chi_hat: Poly
    chitilde_hat: RatFunc
    mu: Fraction

    @property
    def gauge(self):
        return gauge_class(self.idx.d, self.params)

    @property
    def beta_const(self) -> Fraction:
        return self.params.beta_const

    def decoupling(self) -> RatFunc:
        """Rational part ``chit_hat * chi_hat / x`` of the decoupling coefficient."""
        return self.chitilde_hat * self.chi_hat / X

    def to_json(self):
        return {"d": self.idx.d, "m": self.idx.m, "phi_hat": self.phi_hat.to_json(),
                "chi_hat": self.chi_hat.to_json(),
                "chitilde_hat": self.chitilde_hat.to_json(),
                "mu": f"{self.mu.numerator}/{self.mu.denominator}"}


def cleared_identities(seed: SeedData) -> dict:
    """Residuals of the gauge-cleared seed identities (all zero for a true seed)."""
    p = seed.params
    g = seed.gauge
    a, b = p.alpha(), p.beta()
    ch, ct, eta = RatFunc(seed.chi_hat), seed.chitilde_hat, RatFunc(g.eta)
    mu = seed.mu
    sym = a * b.substitute(-1, -1) * ch / eta \
        + a.substitute(-1, -1) * b * g.ratio_TR * ch.substitute(-1, -1) / eta.substitute(-1, -1) \
        + mu * ct
    odd = g.ratio_R * ct.reflect() - ct + (ch / eta) * (mu + p.alpha_const - p.beta_const)
    return {
        "chi_hat odd": ch + ch.reflect(),
        "chitilde_hat parity": g.ratio_TR * ct.substitute(-1, -1) - ct,
        "cleared symmetric relation": sym,
        "cleared reflection relation": odd,
    }


@lru_cache(maxsize=None)
def _build_seed(idx: SeedIndex, p: BIParams, polynomial_only: bool) -> SeedData:
    if (idx.d, idx.m) in ((4, 0), (1, 0)):
        raise InadmissibleSeed(f"seed {idx} gives chi = 0 (or mu = beta)")
    g = gauge_class(idx.d, p)
    poly = seed_polynomial(idx, p)
    phi_hat = g.eta * poly
    chi_hat = phi_hat - phi_hat.reflect()
    mu = seed_eigenvalue(idx, p)
    if chi_hat.is_zero():
        raise InadmissibleSeed(f"seed {idx} has chi_hat = 0")
    b = p.beta()
    ct = b.substitute(-1, -1) * poly + b * g.ratio_TR * RatFunc(poly.substitute(-1, -1))
    seed = SeedData(idx, p, poly, phi_hat, chi_hat, ct, mu)
    if not ct:
        # (2,0): the polynomials of the closed formula exist but F_phi does not
        if polynomial_only:
            return seed
        raise InadmissibleSeed(f"seed {idx} has chitilde_hat = 0, so F_phi is undefined")
    bad = [k for k, v in cleared_identities(seed).items() if v]
    if bad:
        raise IdentityFailed(f"seed {idx}: {', '.join(bad)} fails")
    return seed


def build_seed(idx, p: BIParams, polynomial_only: bool = False) -> SeedData:
    """Normalized seed data.  ``polynomial_only`` admits seeds whose transform
    operator degenerates but whose closed-form polynomials are still defined."""
    return _build_seed(as_index(idx), p, polynomial_only)


# -- operators ---------------------------------------------------------------

@lru_cache(maxsize=None)
def transform_operator(seed: SeedData) -> DunklOperator:
    """``Ft = xi o F_phi = (eta/chi_hat)(R - I) + (1/chit_hat)(TR + I) o beta(-x-1)``."""
    b = seed.params.beta().substitute(-1, -1)
    eta = RatFunc(seed.gauge.eta)
    return (eta / seed.chi_hat) * (R - I) + seed.chitilde_hat.inverse() * ((TR + I) * b)


@lru_cache(maxsize=None)
def backward_operator(seed: SeedData) -> DunklOperator:
    """``Bh = B_phi o xi^{-1}``."""
    p = seed.params
    a, b = p.alpha(), p.beta().substitute(-1, -1)
    ch = RatFunc(seed.chi_hat) / RatFunc(seed.gauge.eta)
    return a * ((R - I) * seed.chitilde_hat) + (TR + I) * (a * b * ch)


@lru_cache(maxsize=None)
def transformed_coefficients(seed: SeedData):
    """Coefficients ``(alpha1, beta1, gamma1)`` of ``H^(1)``, each rational."""
    p = seed.params
    g = seed.gauge
    ch, ct, eta = RatFunc(seed.chi_hat), seed.chitilde_hat, RatFunc(g.eta)
    a1 = g.ratio_R * eta * ct.reflect() / ch
    b1 = g.ratio_TR * p.alpha().substitute(-1, -1) * p.beta() * ch.substitute(-1, -1) / (
        eta.substitute(-1, -1) * ct)
    c1 = RatFunc.const(-(seed.mu + p.alpha_const - p.beta_const))
    return a1, b1, c1


@lru_cache(maxsize=None)
def transformed_operator(seed: SeedData) -> DunklOperator:
    """``H^(1)`` itself; its coefficients only involve gauge ratios."""
    a1, b1, c1 = transformed_coefficients(seed)
    return a1 * (R - I) + b1 * (TR - I) + DunklOperator.mult(c1)


@lru_cache(maxsize=None)
def cleared_transformed_operator(seed: SeedData) -> DunklOperator:
    """``xi H^(1) xi^{-1}``."""
    return conjugate_by_gauge(transformed_operator(seed), seed.gauge.gauge)


@lru_cache(maxsize=None)
def exceptional_operator(seed: SeedData) -> DunklOperator:
    """``Hhat^(1) = r H^(1) r^{-1}``, whose eigenfunctions are the XBI polynomials."""
    return conjugate(cleared_transformed_operator(seed), seed.decoupling())


# -- polynomials ---------------------------------------------------------------

def _odd_over_x(poly: Poly) -> Poly:
    """``(f(x) - f(-x))/x`` as an exact polynomial."""
    diff = poly - poly.reflect()
    q, rem = diff.divmod(X)
    assert rem.is_zero()
    return q


@lru_cache(maxsize=None)
def _xbi(seed: SeedData, n: int) -> Poly:
    p = seed.params
    beta = p.beta_const
    Bn = solve_bi_polynomial(n, p)
    lam = bi_eigenvalue(n, p)
    return (lam - beta) * _odd_over_x(seed.phi_hat) * Bn \
        - (seed.mu - beta) * _odd_over_x(Bn) * seed.phi_hat


def xbi_polynomial(seed: SeedData, n: int, p: BIParams | None = None) -> Poly:
    """``B^(1)_{d,n}``; the zero polynomial for a d=1 seed at ``n = m``."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if p is not None and p != seed.params:
        raise ValueError("parameters differ from the seed's")
    return _xbi(seed, n)


def xbi_by_transform(seed: SeedData, n: int) -> RatFunc:
    """``r_hat * Ft[B_n]``, the operator route to the same polynomial."""
    Bn = solve_bi_polynomial(n, seed.params)
    return seed.decoupling() * transform_operator(seed).apply(Bn)


def is_zero_index(seed: SeedData, n: int) -> bool:
    return seed.idx.d == 1 and n == seed.idx.m


def expected_leading(seed: SeedData, n: int):
    """``(degree, coefficient)`` predicted by the parity table for the top term."""
    d, m = seed.idx
    kappa = seed.gauge.kappa
    vals = degree_coefficients(seed.idx, n, seed.params)
    lam_beta = bi_eigenvalue(n, seed.params) - seed.params.beta_const
    top = n + m + kappa
    if (m + kappa) % 2 == 1:
        if n % 2 == 0:
            return top - 1, 2 * lam_beta
        return top - 1, 2 * vals["lambda-mu"]
    if n % 2 == 0:
        return top - 2, 2 * vals["C"]
    return top - 1, -2 * vals["mu-beta"]


def degree_law(d: int, m: int, n: int) -> int:
    kappa = gauge_class_kappa(d)
    if (m + kappa) % 2 == 1 or n % 2 == 1:
        return n + m + kappa - 1
    return n + m + kappa - 2


def gauge_class_kappa(d: int) -> int:
    return {1: 0, 4: 0, 2: 2, 3: 2}.get(d, 1)


def _consecutive(start, count):
    return [start + i for i in range(count)]


def _doubled(start, count):
    out = [start]
    k = start + 2
    while len(out) < count:
        out += [k, k]
        k += 2
    return out[:count]


def tabulated_degrees(d: int, m: int, n_max: int) -> list:
    """Degree multiset listed case by case for ``n = 0..n_max`` (seed index excluded)."""
    drop = d == 1 and m <= n_max
    count = n_max + 1 - (1 if drop else 0)
    extra = count + 2
    if m % 2 == 1:
        if d == 1:
            seq = [k for k in _consecutive(m - 1, extra) if k != 2 * m - 1]
        elif d == 4:
            seq = _consecutive(m - 1, extra)
        elif d in (2, 3):
            seq = _consecutive(m + 1, extra)
        else:
            seq = _doubled(m - 1, extra)
    else:
        if d == 1:
            seq = _doubled(m - 2, extra + 1)
            if drop:
                seq.remove(2 * m - 2)
        elif d == 4:
            seq = _doubled(m - 2, extra)
        elif d in (2, 3):
            seq = _doubled(m, extra)
        else:
            seq = _consecutive(m, extra)
    return sorted(seq[:count])


def degree_set(idx, n_max: int, p: BIParams) -> list:
    """Sorted degrees of ``B^(1)_{d,n}`` for ``n <= n_max``, checked against the table."""
    seed = build_seed(idx, p, polynomial_only=True)
    d, m = seed.idx
    degs = sorted(xbi_polynomial(seed, n).degree for n in range(n_max + 1)
                  if not is_zero_index(seed, n))
    want = tabulated_degrees(d, m, n_max)
    if degs != want:
        raise DegreeTableMismatch(f"seed {seed.idx}: degrees {degs} but table gives {want}")
    return degs


# -- verification ---------------------------------------------------------------

@dataclass
class VerificationReport:
    label: str
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self):
        return [k for k, v in self.checks.items() if not v]

    def to_json(self):
        return {"label": self.label, "ok": self.ok, "checks": dict(self.checks)}

    def raise_if_failed(self):
        if not self.ok:
            raise IdentityFailed(f"{self.label}: {', '.join(self.failures)} failed")
        return self


def verify_intertwining(seed: SeedData, p: BIParams | None = None, n_max: int = 6,
                        strict: bool = True) -> VerificationReport:
    """Check the four intertwining and factorization identities plus polynomial checks."""
    if p is not None and p != seed.params:
        raise ValueError("parameters differ from the seed's")
    p = seed.params
    H = bi_operator(p)
    F = transform_operator(seed)
    B = backward_operator(seed)
    H1 = cleared_transformed_operator(seed)
    mu, beta = seed.mu, p.beta_const
    rep = VerificationReport(f"seed {seed.idx}")
    rep.checks["F H = H1 F"] = op_equal(F @ H, H1 @ F)
    rep.checks["H B = B H1"] = op_equal(H @ B, B @ H1)
    rep.checks["B F = (H-mu)(H-beta)"] = op_equal(B @ F, (H - mu) @ (H - beta))
    rep.checks["F B = (H1-mu)(H1-beta)"] = op_equal(F @ B, (H1 - mu) @ (H1 - beta))
    unclear = conjugate_by_gauge(F, seed.gauge.gauge, inverse=True)
    rep.checks["F[phi] = 0"] = unclear.apply(seed.p).is_zero()
    Hhat = exceptional_operator(seed)
    a_hat = Hhat.coeff(-1, 0)
    rep.checks["R-coefficient"] = a_hat == RatFunc(seed.gauge.eta) * seed.chitilde_hat / seed.chi_hat
    eig = odd = route = True
    for n in range(n_max + 1):
        P = xbi_polynomial(seed, n)
        lam = bi_eigenvalue(n, p)
        eig &= (Hhat.apply(P) - lam * RatFunc(P)).is_zero()
        Bn = solve_bi_polynomial(n, p)
        lhs = P - P.reflect()
        rhs = (lam - mu) * _odd_over_x(seed.phi_hat) * (Bn - Bn.reflect())
        odd &= lhs == rhs
        route &= xbi_by_transform(seed, n) == RatFunc(P)
    rep.checks["eigen-equation"] = eig
    rep.checks["odd-part identity"] = odd
    rep.checks["operator route"] = route
    if strict:
        rep.raise_if_failed()
    return rep


def constant_image(seed: SeedData) -> RatFunc:
    """``Hhat^(1)[1]``."""
    return exceptional_operator(seed).apply(Poly.const(1))


def missing_eigenfunction(seed: SeedData):
    """Candidate constant eigenfunction at eigenvalue ``mu`` for d=1 seeds.

    Returns Unsupported for d != 1.  For d = 1 the constant is returned only if
    ``Hhat^(1)[1] = mu``; otherwise IdentityFailed reports the actual image
    (for small m the constant is ``B^(1)_0`` itself, with eigenvalue 0).
    """
    if seed.idx.d != 1:
        return Unsupported
    img = constant_image(seed)
    if img != RatFunc.const(seed.mu):
        raise IdentityFailed(f"Hhat^(1)[1] = {img}, not mu = {seed.mu}, for seed {seed.idx}")
    return Poly.const(1)


@dataclass
class XBIFamily:
    seed: SeedData
    polys: dict
    eigenvalues: dict
    degree_set: list
    zero_indices: list

    def to_json(self):
        return {"seed": self.seed.to_json(),
                "polys": {str(n): P.to_json() for n, P in self.polys.items()},
                "eigenvalues": {str(n): f"{v.numerator}/{v.denominator}"
                                for n, v in self.eigenvalues.items()},
                "degree_set": list(self.degree_set), "zero_indices": list(self.zero_indices)}


def xbi_family(idx, n_max: int, p: BIParams) -> XBIFamily:
    seed = build_seed(idx, p)
    polys, eigs, zeros = {}, {}, []
    for n in range(n_max + 1):
        if is_zero_index(seed, n):
            zeros.append(n)
            continue
        polys[n] = xbi_polynomial(seed, n)
        eigs[n] = bi_eigenvalue(n, p)
    return XBIFamily(seed, polys, eigs, degree_set(seed.idx, n_max, p), zeros)
