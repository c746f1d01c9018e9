"""Operators built from reflection, unit shift and rational coefficients.

A :class:`DunklOperator` is a finite sum of terms ``c(x) f(sign*x + shift)``
stored as a mapping ``(sign, shift) -> RatFunc``.  The substitutions
``x -> sign*x + shift`` with integer shift form the infinite dihedral group,
so every word in ``R`` and ``T`` collapses to a single key and composition
stays in normal form.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import ZeroDenominator
from .exact import RatFunc, as_ratfunc


class DunklOperator:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            sign, shift = key
            if sign not in (1, -1):
                raise ValueError(f"sign must be +1 or -1, got {sign}")
            if not isinstance(shift, int) or isinstance(shift, bool):
                if isinstance(shift, Fraction) and shift.denominator == 1:
                    shift = int(shift)
                else:
                    raise TypeError(f"shifts must be integers, got {shift!r}")
            c = as_ratfunc(c)
            if c:
                clean[(sign, shift)] = c
        self.terms = clean

    @classmethod
    def _from_clean(cls, terms):
        op = object.__new__(cls)
        op.terms = terms
        return op

    @classmethod
    def term(cls, sign: int, shift: int, coeff=1) -> DunklOperator:
        return cls({(sign, shift): coeff})

    @classmethod
    def mult(cls, f) -> DunklOperator:
        """Multiplication by the function ``f``."""
        return cls({(1, 0): f})

    def coeff(self, sign: int, shift: int) -> RatFunc:
        return self.terms.get((sign, shift), RatFunc.const(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, DunklOperator):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"DunklOperator({self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (sign, shift), c in sorted(self.terms.items()):
            parts.append(f"[{c}]*S({sign:+d},{shift:+d})")
        return " + ".join(parts)

    # -- linear structure -------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, DunklOperator):
            other = DunklOperator.mult(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out[key] + c if key in out else c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return DunklOperator._from_clean(out)

    __radd__ = __add__

    def __neg__(self):
        return DunklOperator._from_clean({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, DunklOperator):
            other = DunklOperator.mult(other)
        return self + (-other)

    def __rsub__(self, other):
        return DunklOperator.mult(other) - self

    def __mul__(self, f):
        """Right multiplication by a function or scalar: ``self o f``."""
        if isinstance(f, DunklOperator):
            return self @ f
        return self @ DunklOperator.mult(f)

    def __rmul__(self, f):
        """Left multiplication ``f o self``."""
        f = as_ratfunc(f)
        if not f:
            return DunklOperator()
        return DunklOperator._from_clean({k: f * c for k, c in self.terms.items()})

    # -- algebra ----------------------------------------------------------
    def __matmul__(self, other: DunklOperator) -> DunklOperator:
        return compose(self, other)

    def apply(self, f):
        """``sum c(x) f(sign*x + shift)`` as a reduced RatFunc."""
        f = as_ratfunc(f)
        out = RatFunc.const(0)
        for (sign, shift), c in self.terms.items():
            out = out + c * f.substitute(sign, shift)
        return out

    __call__ = apply

    def substitute_coeffs(self, fn) -> DunklOperator:
        return DunklOperator({k: fn(k, c) for k, c in self.terms.items()})

    def to_json(self):
        return [{"sign": s, "shift": k, "coeff": c.to_json()}
                for (s, k), c in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data) -> DunklOperator:
        return cls({(int(t["sign"]), int(t["shift"])): RatFunc.from_json(t["coeff"])
                    for t in data})


def compose(a: DunklOperator, b: DunklOperator) -> DunklOperator:
    """Normal form of ``a o b``.

    ``(c1, e1, k1) o (c2, e2, k2) = (c1(x) c2(e1 x + k1), e1 e2, e2 k1 + k2)``.
    """
    out = {}
    for (e1, k1), c1 in a.terms.items():
        for (e2, k2), c2 in b.terms.items():
            key = (e1 * e2, e2 * k1 + k2)
            c = c1 * c2.substitute(e1, k1)
            if key in out:
                c = out[key] + c
            out[key] = c
    return DunklOperator._from_clean({k: c for k, c in out.items() if c})


def apply(op: DunklOperator, f) -> RatFunc:
    return op.apply(f)


def op_equal(a: DunklOperator, b: DunklOperator) -> bool:
    return (a - b).is_zero()


def conjugate(op: DunklOperator, g) -> DunklOperator:
    """``g o op o g^{-1}`` for a nonzero rational function ``g``."""
    g = as_ratfunc(g)
    if not g:
        raise ZeroDenominator("cannot conjugate by the zero function")
    out = {}
    for (sign, shift), c in op.terms.items():
        out[(sign, shift)] = g * c / g.substitute(sign, shift)
    return DunklOperator._from_clean(out)


class GaugeRatios:
    """Rational data of a gauge factor ``xi`` known only through two ratios.

    ``reflect`` is ``xi(-x)/xi(x)`` and ``shift_reflect`` is
    ``xi(-x-1)/xi(x)``; :meth:`ratio` extends these to ``xi(sign*x+k)/xi(x)``
    for any integer ``k`` by the cocycle rule.
    """

    def __init__(self, reflect, shift_reflect):
        self.reflect = as_ratfunc(reflect)
        self.shift_reflect = as_ratfunc(shift_reflect)
        self._cache = {(1, 0): RatFunc.const(1), (-1, 0): self.reflect,
                       (-1, -1): self.shift_reflect}
        # xi(x+1)/xi(x) = [xi(-y)/xi(y)]_{y=-x-1} * xi(-x-1)/xi(x)
        self._step = self.reflect.substitute(-1, -1) * self.shift_reflect

    def ratio(self, sign: int, shift: int) -> RatFunc:
        key = (sign, shift)
        if key in self._cache:
            return self._cache[key]
        if sign == 1:
            if shift > 0:
                val = self.ratio(1, shift - 1) * self._step.substitute(1, shift - 1)
            else:
                val = self.ratio(1, shift + 1) / self._step.substitute(1, shift)
        else:
            val = self.ratio(1, shift).substitute(-1, 0) * self.reflect
        self._cache[key] = val
        return val


def conjugate_by_gauge(op: DunklOperator, gauge: GaugeRatios, inverse=False) -> DunklOperator:
    """``xi o op o xi^{-1}`` (or ``xi^{-1} o op o xi`` with ``inverse=True``)."""
    out = {}
    for (sign, shift), c in op.terms.items():
        q = gauge.ratio(sign, shift)
        out[(sign, shift)] = c * q if inverse else c / q
    return DunklOperator._from_clean(out)


I = DunklOperator.term(1, 0)
R = DunklOperator.term(-1, 0)
T = DunklOperator.term(1, 1)
TR = DunklOperator.term(-1, -1)
RTR = DunklOperator.term(1, -1)
ZERO_OP = DunklOperator()


def word(letters: str) -> DunklOperator:
    """Compose a word in ``R``, ``T``, ``I`` (leftmost letter acts last)."""
    table = {"R": R, "T": T, "I": I}
    out = I
    for ch in letters:
        out = out @ table[ch]
    return out


def product_rules(f) -> dict:
    """The reflection/shift product rules as ``name -> (lhs, rhs)`` for a coefficient ``f``.

    Each left side is a composition ``A o f o B``; each right side is the
    closed form.  Both are built independently so ``op_equal`` is a real check.
    """
    f = as_ratfunc(f)
    fr, fs = f.reflect(), f.substitute(-1, -1)
    F = DunklOperator.mult(f)

    def sandwich(a, b):
        return a @ F @ b

    return {
        "RR = I": (R @ R, I),
        "TRTR = I": (TR @ TR, I),
        "RTRT = I": (R @ T @ R @ T, I),
        "(R-I)f(R-I)": (sandwich(R - I, R - I), (f + fr) * (I - R)),
        "(TR+I)f(TR+I)": (sandwich(TR + I, TR + I), (f + fs) * (TR + I)),
        "(TR+I)f(TR-I)": (sandwich(TR + I, TR - I), (f - fs) * (TR - I)),
        "(TR-I)f(TR+I)": (sandwich(TR - I, TR + I), (fs - f) * (TR + I)),
        "(R-I)f(TR-I)": (sandwich(R - I, TR - I), fr * RTR - f * TR - fr * R + f * I),
        "(R-I)f(TR+I)": (sandwich(R - I, TR + I), fr * RTR - f * TR + fr * R - f * I),
        "(TR-I)f(R-I)": (sandwich(TR - I, R - I), fs * T - fs * TR - f * R + f * I),
        "(TR+I)f(R-I)": (sandwich(TR + I, R - I), fs * T - fs * TR + f * R - f * I),
    }
