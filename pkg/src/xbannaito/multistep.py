"""Chains of Darboux steps seeded by classical Bannai-Ito polynomials.

Step ``k`` takes ``K = a(R - I) + b(TR - I) + c`` (``c`` constant) and a seed
eigenfunction ``phi`` of ``K`` and produces

    F  = (1/chi)(R - I) + (1/chit)(TR + I) o b(-x-1)
    a1 = chit(-x)/chi,   b1 = a(-x-1) b(x) chi(-x-1)/chit,
    c1 = (chit(-x) - chit(x))/chi + c

with ``chi = phi - phi(-x)`` and ``chit = b(-x-1) phi + b(x) phi(-x-1)``.
Everything is rational because every seed is a polynomial pushed through
earlier steps.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bannai_ito import BIParams, bi_eigenvalue, bi_operator, solve_bi_polynomial
from .dunkl import I, R, TR, DunklOperator, op_equal
from .errors import DeterminantMismatch, DuplicateSeed, IdentityFailed
from .exact import RatFunc, as_ratfunc


@dataclass(frozen=True)
class Step:
    """One operator ``a(R - I) + b(TR - I) + c`` of a chain."""

    a: RatFunc
    b: RatFunc
    c: RatFunc

    @property
    def operator(self) -> DunklOperator:
        return self.a * (R - I) + self.b * (TR - I) + DunklOperator.mult(self.c)


@dataclass(frozen=True)
class ChainState:
    params: BIParams
    seeds: tuple
    steps: tuple
    transforms: tuple

    @property
    def step(self) -> int:
        return len(self.seeds)

    @property
    def operators(self):
        return [s.operator for s in self.steps]

    @property
    def top(self) -> DunklOperator:
        return self.steps[-1].operator

    def eigenvalue(self, m: int) -> Fraction:
        return bi_eigenvalue(m, self.params)


def start_chain(p: BIParams) -> ChainState:
    zero = RatFunc.const(0)
    return ChainState(p, (), (Step(p.alpha(), p.beta(), zero),), ())


def chit1(m: int, p: BIParams) -> RatFunc:
    """``beta(-x-1) B_m(x) + beta(x) B_m(-x-1)``."""
    Bm = RatFunc(solve_bi_polynomial(m, p))
    b = p.beta()
    return b.substitute(-1, -1) * Bm + b * Bm.substitute(-1, -1)


def transform_data(step: Step, phi: RatFunc):
    chi = phi - phi.reflect()
    bm = step.b.substitute(-1, -1)
    chit = bm * phi + step.b * phi.substitute(-1, -1)
    return chi, chit


def step_conditions(step: Step) -> dict:
    """Residuals of the three conditions that let another step be taken."""
    a, b, c = step.a, step.b, step.c
    return {
        "alpha condition": a + a.reflect() - a.substitute(-1, -1) - a.substitute(1, 1),
        "beta condition": b.reflect() + b.substitute(1, -1) - b - b.substitute(-1, -1),
        "gamma reflect": c.reflect() - c,
        "gamma shift-reflect": c.substitute(-1, -1) - c,
    }


def chain_eigenfunction(state: ChainState, m: int) -> RatFunc:
    """Push ``B_m`` through every transform of the chain."""
    f = RatFunc(solve_bi_polynomial(m, state.params))
    for F in state.transforms:
        f = F.apply(f)
    return f


def advance_chain(state: ChainState, m: int, check: bool = True) -> ChainState:
    if m in state.seeds:
        raise DuplicateSeed(f"seed {m} already used in chain {state.seeds}")
    p = state.params
    lam = bi_eigenvalue(m, p)
    if any(bi_eigenvalue(k, p) == lam for k in state.seeds):
        raise DuplicateSeed(f"eigenvalue of seed {m} repeats an earlier seed's")
    cur = state.steps[-1]
    phi = chain_eigenfunction(state, m)
    if not phi:
        raise IdentityFailed(f"seed {m} is annihilated by the chain")
    chi, chit = transform_data(cur, phi)
    if not chi or not chit:
        raise IdentityFailed(f"seed {m} gives a degenerate transform")
    F = chi.inverse() * (R - I) + chit.inverse() * ((TR + I) * cur.b.substitute(-1, -1))
    a1 = chit.reflect() / chi
    b1 = cur.a.substitute(-1, -1) * cur.b * chi.substitute(-1, -1) / chit
    c1 = (chit.reflect() - chit) / chi + cur.c
    new = Step(a1, b1, c1)
    if check:
        if (cur.operator.apply(phi) - lam * phi):
            raise IdentityFailed(f"seed {m} is not an eigenfunction of the current operator")
        if not op_equal(F @ cur.operator, new.operator @ F):
            raise IdentityFailed(f"F o K != K1 o F at step {state.step + 1}")
        bad = [k for k, v in step_conditions(new).items() if v]
        if bad:
            raise IdentityFailed(f"step {state.step + 1}: {', '.join(bad)} fails")
    return ChainState(p, state.seeds + (m,), state.steps + (new,), state.transforms + (F,))


def build_chain(seeds, p: BIParams, check: bool = True) -> ChainState:
    state = start_chain(p)
    for m in seeds:
        state = advance_chain(state, m, check)
    return state


def printed_gamma(state: ChainState, k: int) -> RatFunc:
    """``-(mu_k + a + a(-x) + b + b(-x-1))`` built from step ``k-1``'s coefficients."""
    prev = state.steps[k - 1]
    mu = bi_eigenvalue(state.seeds[k - 1], state.params)
    a, b = prev.a, prev.b
    return -(a + a.reflect() + b + b.substitute(-1, -1)) - mu


def _det2(a, b, c, d):
    return a * d - b * c


def _det3(rows):
    (a, b, c), (d, e, f), (g, h, i) = rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def determinant_eigenfunction(state: ChainState, m: int) -> RatFunc:
    """Closed 3x3-determinant form of the eigenfunction of the top operator."""
    n = state.step
    if n < 2:
        raise ValueError("the determinant form needs at least two steps")
    p = state.params
    mus = [bi_eigenvalue(k, p) for k in state.seeds]
    mu_m = bi_eigenvalue(m, p)
    ct = {k: chit1(k, p) for k in (m, state.seeds[n - 1], state.seeds[n - 2])}
    row = lambda k, mu: (ct[k] * mu, ct[k], ct[k].reflect())
    num = _det3([row(m, mu_m), row(state.seeds[n - 1], mus[n - 1]),
                 row(state.seeds[n - 2], mus[n - 2])])
    cn, cn1 = ct[state.seeds[n - 1]], ct[state.seeds[n - 2]]
    den = (mus[n - 1] - mus[n - 2]) * cn * _det2(cn, cn.reflect(), cn1, cn1.reflect())
    pref = Fraction(1)
    for j in range(n - 2):
        pref *= (mu_m - mus[j]) / (mus[n - 1] - mus[j])
    return num / den * pref


def check_determinant(state: ChainState, m: int) -> RatFunc:
    rec = chain_eigenfunction(state, m)
    det = determinant_eigenfunction(state, m)
    if rec != det:
        raise DeterminantMismatch(f"determinant and recursion differ at m={m}, chain {state.seeds}")
    return det


def composite_transform(state: ChainState) -> DunklOperator:
    out = I
    for F in state.transforms:
        out = F @ out
    return out


def chain_intertwining(state: ChainState) -> bool:
    """``(F_n ... F_1) o H = H^(n) o (F_n ... F_1)``."""
    G = composite_transform(state)
    return op_equal(G @ bi_operator(state.params), state.top @ G)
