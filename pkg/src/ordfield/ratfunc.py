"""Polynomials and rational functions over Q, with two orderings.

``AT_INFINITY`` orders by eventual sign as the variable grows without bound
(``x`` is infinitely large).  ``AT_ZERO`` orders through the Laurent expansion
about zero (``t`` is a positive infinitesimal).
"""

from __future__ import annotations

import enum
from numbers import Rational

from .base import Classification, ModeMismatchError, NotFiniteError, Ordering
from .rational import Q
from .series import INF, Mode, Series


class Polynomial:
    """Dense univariate polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [c if type(c) is Q else Q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Q:
        return self.coeffs[-1] if self.coeffs else Q(0)

    def low_order(self) -> int:
        """Multiplicity of 0 as a root (order of vanishing at zero)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("zero polynomial has no order at zero")

    def low_coefficient(self) -> Q:
        return self.coeffs[self.low_order()]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    def __neg__(self) -> Polynomial:
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, Rational):
            return Polynomial(c * other for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lc = other.leading_coefficient()
        quot = [0] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lc
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Polynomial(quot), Polynomial(rem[:dq])

    def monic(self) -> Polynomial:
        lc = self.leading_coefficient()
        return Polynomial(c / lc for c in self.coeffs)

    def compose_square(self) -> Polynomial:
        """p(x) -> p(x^2)."""
        out = []
        for c in self.coeffs:
            out += [c, 0]
        return Polynomial(out)

    def reversed(self, degree: int | None = None) -> Polynomial:
        """x^d p(1/x) with d = deg p unless given."""
        d = self.degree if degree is None else degree
        cs = self.coeffs + (0,) * (d + 1 - len(self.coeffs))
        return Polynomial(reversed(cs))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def to_series(self, mode: Mode = Mode.LAURENT) -> Series:
        return Series(enumerate(self.coeffs), INF, mode)

    def to_string(self, var: str = "x") -> str:
        return self.to_series().to_string(var)

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_string()!r})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    # monic remainders keep the coefficients from growing
    if b.is_zero():
        return a.monic() if not a.is_zero() else a
    a, b = b.monic(), divmod(a, b)[1]
    while not b.is_zero():
        b = b.monic()
        a, b = b, divmod(a, b)[1]
    return a


class RFMode(enum.Enum):
    AT_INFINITY = "inf"
    AT_ZERO = "zero"

    @property
    def var(self) -> str:
        return "x" if self is RFMode.AT_INFINITY else "t"


class RationalFunction:
    """Reduced quotient num/den with monic denominator."""

    __slots__ = ("num", "den", "mode")

    def __init__(self, num, den=None, mode: RFMode = RFMode.AT_INFINITY):
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = Polynomial((1,)) if den is None else den if isinstance(den, Polynomial) else Polynomial(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            den = Polynomial((1,))
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = divmod(num, g)[0], divmod(den, g)[0]
            lc = den.leading_coefficient()
            if lc != 1:
                num, den = num * (1 / lc), den * (1 / lc)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "mode", RFMode(mode))

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def _make(cls, num: Polynomial, den: Polynomial, mode: RFMode) -> RationalFunction:
        # trusted constructor: num/den already reduced, den monic
        r = object.__new__(cls)
        object.__setattr__(r, "num", num)
        object.__setattr__(r, "den", den)
        object.__setattr__(r, "mode", mode)
        return r

    @classmethod
    def constant(cls, q, mode: RFMode = RFMode.AT_INFINITY) -> RationalFunction:
        return cls(Polynomial((q,)), None, mode)

    @classmethod
    def variable(cls, mode: RFMode = RFMode.AT_INFINITY) -> RationalFunction:
        return cls(Polynomial.x(), None, mode)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            if other.mode is not self.mode:
                raise ModeMismatchError("cannot combine rational functions with different orderings")
            return other
        if isinstance(other, Rational):
            return RationalFunction.constant(other, self.mode)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den, self.mode)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction._make(-self.num, self.den, self.mode)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self.num * other.num, self.den * other.den, self.mode)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.is_zero():
            raise ZeroDivisionError("rational function is zero")
        lc = self.num.leading_coefficient()
        return RationalFunction._make(self.den * (1 / lc), self.num * (1 / lc), self.mode)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n):
        if not (isinstance(n, int) or (isinstance(n, Q) and n.denominator == 1)):
            raise ModeMismatchError(f"rational functions only take integer powers, got {n}")
        n = int(n)
        base = self if n >= 0 else self.inverse()
        return RationalFunction(
            _poly_pow(base.num, abs(n)), _poly_pow(base.den, abs(n)), self.mode
        )

    # -- order ------------------------------------------------------------

    def sign(self) -> int:
        if self.is_zero():
            return 0
        if self.mode is RFMode.AT_INFINITY:
            lead = self.num.leading_coefficient() * self.den.leading_coefficient()
        else:
            lead = self.num.low_coefficient() * self.den.low_coefficient()
        return 1 if lead > 0 else -1

    def _cmp(self, other) -> int:
        # sign of self - other without reducing the difference
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError("cannot compare RationalFunction with this type")
        num = self.num * other.den - other.num * self.den
        if num.is_zero():
            return 0
        return RationalFunction._make(num, self.den * other.den, self.mode).sign()

    def compare(self, other) -> Ordering:
        return Ordering.from_sign(self._cmp(other))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def valuation(self):
        """Order of vanishing at the selected place; ``inf`` for zero.

        Positive means infinitesimal in the active ordering.
        """
        if self.is_zero():
            return INF
        if self.mode is RFMode.AT_INFINITY:
            return Q(self.den.degree - self.num.degree)
        return Q(self.num.low_order() - self.den.low_order())

    def classify(self) -> Classification:
        return Classification.from_valuation(self.valuation())

    def standard_part(self) -> Q:
        v = self.valuation()
        if v < 0:
            raise NotFiniteError(f"{self} is infinitely large")
        if v > 0:
            return Q(0)
        if self.mode is RFMode.AT_INFINITY:
            return self.num.leading_coefficient() / self.den.leading_coefficient()
        return self.num.low_coefficient() / self.den.low_coefficient()

    def decompose(self) -> tuple[Q, RationalFunction]:
        st = self.standard_part()
        return st, self - st

    # -- maps -------------------------------------------------------------

    def laurent_at_zero(self, depth: int = 16) -> Series:
        """Laurent expansion about 0, known up to ``valuation + depth``."""
        if self.is_zero():
            return Series((), INF, Mode.LAURENT)
        num = self.num.to_series()
        den = self.den.to_series()
        k = self.den.low_order()
        inv = den.inverse(depth)
        # den.inverse keeps depth relative to its own leading exponent
        out = num * inv
        v = self.num.low_order() - k
        return out.truncate(v + depth) if out.order > v + depth else out

    def sigma_square(self) -> RationalFunction:
        """f(x) -> f(x^2)."""
        return RationalFunction(self.num.compose_square(), self.den.compose_square(), self.mode)

    def reciprocal_substitute(self) -> RationalFunction:
        """f(x) -> f(1/t), returned in AT_ZERO ordering."""
        if self.is_zero():
            return RationalFunction(Polynomial(), None, RFMode.AT_ZERO)
        dn, dd = self.num.degree, self.den.degree
        num, den = self.num.reversed(), self.den.reversed()
        shift = Polynomial((0,) * abs(dd - dn) + (1,))
        if dd >= dn:
            num = num * shift
        else:
            den = den * shift
        return RationalFunction(num, den, RFMode.AT_ZERO)

    # -- equality / display ----------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (RationalFunction, Rational)):
            try:
                other = self._coerce(other)
            except ModeMismatchError:
                return False
            return (self.num, self.den) == (other.num, other.den)
        return NotImplemented

    def __hash__(self):
        if self.den.degree == 0 and self.num.degree <= 0:
            return hash(self.num.coeffs[0] if self.num.coeffs else 0)
        return hash((self.num, self.den, self.mode))

    def to_string(self, var: str | None = None) -> str:
        var = var or self.mode.var
        return f"({self.num.to_string(var)})/({self.den.to_string(var)})"

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"RationalFunction({self.to_string()!r}, mode={self.mode.value})"


def _poly_pow(p: Polynomial, n: int) -> Polynomial:
    out = Polynomial((1,))
    for _ in range(n):
        out = out * p
    return out


def rf_arith(a: RationalFunction, b: RationalFunction, op: str) -> RationalFunction:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def rf_cmp_at_infinity(a: RationalFunction, b: RationalFunction) -> Ordering:
    if a.mode is not RFMode.AT_INFINITY or b.mode is not RFMode.AT_INFINITY:
        raise ModeMismatchError("rf_cmp_at_infinity needs the at-infinity ordering")
    return a.compare(b)


def rf_laurent_at_zero(a: RationalFunction, depth: int = 16) -> Series:
    return a.laurent_at_zero(depth)


def rf_classify(a: RationalFunction) -> Classification:
    return a.classify()


def rf_sigma_square(a: RationalFunction) -> RationalFunction:
    return a.sigma_square()
