"""Exact scalars, dense univariate polynomials and rational functions over Q.

Everything here is immutable.  ``Rational`` is :class:`fractions.Fraction`;
polynomials store their coefficients lowest degree first with no trailing
zeros, and rational functions are kept reduced with a monic denominator so
that equality is structural.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb

from .errors import ParseError, ZeroDenominator

Rational = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def Q(value) -> Fraction:
    """Coerce ints, Fractions and ``"a/b"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a string or Fraction")
    return Fraction(value)


_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``[sign]int[/positive int]`` exactly."""
    m = _RATIONAL_RE.match(text)
    if not m:
        pos = 0
        stripped = text.lstrip()
        pos = len(text) - len(stripped)
        for i, ch in enumerate(stripped):
            if not (ch.isdigit() or ch in "+-/ " or (i == 0 and ch in "+-")):
                pos += i
                break
        else:
            pos = len(text)
        raise ParseError(f"not a rational: {text!r}", pos)
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}", text.index("/") + 1)
    return Fraction(int(num), int(den) if den is not None else 1)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


class Poly:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``x**i``."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [c if isinstance(c, Fraction) else Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs):
        # caller guarantees Fractions with no trailing zeros
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def const(cls, c) -> Poly:
        return cls((c,))

    @classmethod
    def x(cls) -> Poly:
        return cls((0, 1))

    @classmethod
    def monomial(cls, k: int, c=1) -> Poly:
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots) -> Poly:
        p = cls.const(1)
        for r in roots:
            p = p * cls((-Q(r), 1))
        return p

    # -- basic properties -------------------------------------------------
    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else _ZERO

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else _ZERO

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if i == 0:
                body = str(a)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if a == 1 else f"{a}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        if not isinstance(other, Poly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Poly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        while out and out[-1] == 0:
            out.pop()
        return Poly._raw(tuple(out))

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return Poly.const(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if not isinstance(other, (int, Fraction)):
                return NotImplemented
            c = Q(other)
            if c == 0:
                return Poly._raw(())
            return Poly._raw(tuple(a * c for a in self.coeffs))
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._raw(())
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c) -> Poly:
        return self * Q(c)

    def monic(self) -> Poly:
        if not self.coeffs:
            return self
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        return Poly._raw(tuple(c / lc for c in self.coeffs))

    def divmod(self, other: Poly):
        if other.is_zero():
            raise ZeroDenominator("polynomial division by zero")
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        lb = other.coeffs[-1]
        if len(rem) - 1 < db:
            return Poly._raw(()), self
        quot = [_ZERO] * (len(rem) - db)
        bc = other.coeffs
        for k in range(len(rem) - 1 - db, -1, -1):
            c = rem[k + db] / lb
            quot[k] = c
            if c:
                for j in range(db + 1):
                    rem[k + j] -= c * bc[j]
        rem = rem[:db]
        while rem and rem[-1] == 0:
            rem.pop()
        return Poly(quot), Poly._raw(tuple(rem))

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    def exact_div(self, other: Poly) -> Poly:
        q, r = self.divmod(other)
        if r:
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def gcd(self, other: Poly) -> Poly:
        """Monic gcd (zero only when both inputs are zero)."""
        a, b = self, other
        if a.degree < b.degree:
            a, b = b, a
        while b:
            a, b = b, (a % b).monic()
        return a.monic()

    # -- evaluation and substitution --------------------------------------
    def __call__(self, x):
        if isinstance(x, Poly):
            out = Poly._raw(())
            for c in reversed(self.coeffs):
                out = out * x + c
            return out
        acc = _ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def reflect(self) -> Poly:
        """``p(-x)``."""
        return Poly._raw(tuple(-c if i & 1 else c for i, c in enumerate(self.coeffs)))

    def shift(self, k) -> Poly:
        """``p(x + k)`` by binomial expansion."""
        k = Q(k)
        if k == 0 or len(self.coeffs) <= 1:
            return self
        n = len(self.coeffs)
        out = [_ZERO] * n
        powers = [_ONE]
        for _ in range(n):
            powers.append(powers[-1] * k)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j in range(i + 1):
                out[j] += c * comb(i, j) * powers[i - j]
        return Poly(out)

    def substitute(self, sign: int, shift) -> Poly:
        """``p(sign*x + shift)``."""
        q = self.shift(shift)
        return q.reflect() if sign < 0 else q

    def even_part(self) -> Poly:
        return Poly(c if i % 2 == 0 else 0 for i, c in enumerate(self.coeffs))

    def odd_part(self) -> Poly:
        return Poly(c if i % 2 else 0 for i, c in enumerate(self.coeffs))

    def to_json(self):
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> Poly:
        return cls(parse_rational(s) for s in data)


def poly_reflect(p: Poly) -> Poly:
    return p.reflect()


def poly_shift(p: Poly, k) -> Poly:
    return p.shift(k)


X = Poly.x()
ONE = Poly.const(1)
ZERO = Poly()


class RatFunc:
    """Reduced quotient ``num/den`` with ``den`` monic."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _reduced=False):
        if not isinstance(num, Poly):
            num = Poly.const(num)
        if den is None:
            den = ONE
        elif not isinstance(den, Poly):
            den = Poly.const(den)
        if den.is_zero():
            raise ZeroDenominator("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = ONE
            elif not den.is_constant():
                g = num.gcd(den)
                if not g.is_constant():
                    num = num.exact_div(g)
                    den = den.exact_div(g)
            lc = den.lead
            if lc != 1:
                num = num * (1 / lc)
                den = den.monic()
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def poly(cls, p: Poly) -> RatFunc:
        return cls(p, ONE, _reduced=True)

    @classmethod
    def const(cls, c) -> RatFunc:
        return cls(Poly.const(c), ONE, _reduced=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def is_constant(self) -> bool:
        return self.den.is_constant() and self.num.is_constant()

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.coeff(0)

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial")
        return self.num

    def __bool__(self):
        return not self.num.is_zero()

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, Poly):
            return self.den == ONE and self.num == other
        if isinstance(other, (int, Fraction)):
            return self.den == ONE and self.num == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.poly(other)
        return RatFunc.const(Q(other))

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __add__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        other = self._coerce(other)
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        if self.den == ONE:
            return RatFunc(self.num * other.den + other.num, other.den, _reduced=True)
        if other.den == ONE:
            return RatFunc(other.num * self.den + self.num, self.den, _reduced=True)
        g = self.den.gcd(other.den)
        if g.is_constant():
            return RatFunc(self.num * other.den + other.num * self.den,
                           self.den * other.den, _reduced=True)
        b1 = self.den.exact_div(g)
        d1 = other.den.exact_div(g)
        return RatFunc(self.num * d1 + other.num * b1, b1 * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc.const(0)
            return RatFunc(self.num * other, self.den, _reduced=True)
        if not isinstance(other, _SCALARS):
            return NotImplemented
        other = self._coerce(other)
        if self.num.is_zero() or other.num.is_zero():
            return RatFunc.const(0)
        # cross-cancel before multiplying
        g1 = self.num.gcd(other.den)
        g2 = other.num.gcd(self.den)
        n1, d2 = self.num, other.den
        if not g1.is_constant():
            n1, d2 = n1.exact_div(g1), d2.exact_div(g1)
        n2, d1 = other.num, self.den
        if not g2.is_constant():
            n2, d1 = n2.exact_div(g2), d1.exact_div(g2)
        return RatFunc(n1 * n2, d1 * d2, _reduced=True)

    __rmul__ = __mul__

    def inverse(self) -> RatFunc:
        if self.num.is_zero():
            raise ZeroDenominator("inverse of the zero rational function")
        lc = self.num.lead
        return RatFunc(self.den * (1 / lc), self.num.monic(), _reduced=True)

    def __truediv__(self, other):
        if not isinstance(other, _SCALARS):
            return NotImplemented
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k, _reduced=True)

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDenominator(f"pole of {self} at x = {x}")
        return self.num(x) / d

    def substitute(self, sign: int, shift) -> RatFunc:
        """``f(sign*x + shift)``, reduced."""
        num = self.num.substitute(sign, shift)
        den = self.den.substitute(sign, shift)
        lc = den.lead
        if lc != 1:
            num = num * (1 / lc)
            den = den.monic()
        return RatFunc(num, den, _reduced=True)

    def reflect(self) -> RatFunc:
        return self.substitute(-1, 0)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data) -> RatFunc:
        return cls(Poly.from_json(data["num"]), Poly.from_json(data["den"]))


_SCALARS = (RatFunc, Poly, int, Fraction)


def ratfunc_normalize(num: Poly, den: Poly) -> RatFunc:
    return RatFunc(num, den)


def ratfunc_substitute(f: RatFunc, sign: int, shift) -> RatFunc:
    return f.substitute(sign, shift)


def as_ratfunc(value) -> RatFunc:
    return RatFunc._coerce(value)


def is_integer(q: Fraction) -> bool:
    return q.denominator == 1
