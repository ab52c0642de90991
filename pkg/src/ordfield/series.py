"""Truncated generalized power series over Q.

A :class:`Series` is a finite sum ``sum c_e t^e`` together with a truncation
order: every coefficient below ``order`` is known exactly and nothing is known
at or above it.  ``order == math.inf`` marks an exact element (a Laurent
polynomial).  Exponents are integers in Laurent mode and arbitrary rationals in
Levi-Civita mode; the ordering is the usual one where ``t`` is a positive
infinitesimal, i.e. the sign of an element is the sign of its lowest
coefficient.
"""

from __future__ import annotations

import enum
import math
from numbers import Rational

from .base import (
    Classification,
    ModeMismatchError,
    NegativeSqrtError,
    NonHalvableValuationError,
    NonSquareCoefficientError,
    NotFiniteError,
    Ordering,
    PrecisionError,
    TruncationAmbiguityError,
)
from .rational import Q, rat_root_exact, rat_sqrt_exact

INF = math.inf

#: relative precision used when inverting or rooting an exact element
DEFAULT_DEPTH = 16


class Mode(enum.Enum):
    LAURENT = "laurent"
    LEVI_CIVITA = "lc"


def _exponent(e, mode: Mode) -> Q:
    e = Q(e)
    if mode is Mode.LAURENT and e.denominator != 1:
        raise ModeMismatchError(f"rational exponent {e} in Laurent mode")
    return e


def _order(o, mode: Mode):
    if o == INF:
        return INF
    return _exponent(o, mode)


def format_exponent(e) -> str:
    e = Q(e)
    if e.denominator == 1:
        return str(e.numerator)
    return f"({e})"


def format_monomial(e, var: str = "t") -> str:
    if e == 0:
        return "1"
    if e == 1:
        return var
    return f"{var}^{format_exponent(e)}"


def _binom_half(k: int) -> Q:
    # generalized binomial coefficient C(1/2, k)
    c = Q(1)
    for i in range(k):
        c = c * (Q(1, 2) - i) / (i + 1)
    return c


class Series:
    """Immutable truncated series; see the module docstring for semantics."""

    __slots__ = ("terms", "order", "mode")

    def __init__(self, terms=(), order=INF, mode: Mode = Mode.LAURENT):
        mode = Mode(mode)
        order = _order(order, mode)
        acc: dict[Q, Q] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for e, c in items:
            e = _exponent(e, mode)
            if e < order:
                acc[e] = acc.get(e, 0) + Q(c)
        self._set(tuple(sorted((e, c) for e, c in acc.items() if c)), order, mode)

    def _set(self, terms, order, mode):
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "mode", mode)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    @classmethod
    def _make(cls, terms, order, mode) -> Series:
        # trusted constructor: terms already sorted, nonzero and below order.
        # inf + Q is a gmpy2 mpfr, so pin infinite orders back to INF
        if order == INF:
            order = INF
        s = object.__new__(cls)
        s._set(terms, order, mode)
        return s

    @classmethod
    def constant(cls, q, mode: Mode = Mode.LAURENT) -> Series:
        return cls(((0, q),), INF, mode)

    @classmethod
    def monomial(cls, coeff=1, exponent=1, mode: Mode = Mode.LAURENT) -> Series:
        return cls(((exponent, coeff),), INF, mode)

    @classmethod
    def big_o(cls, exponent, mode: Mode = Mode.LAURENT) -> Series:
        """The zero series known only below ``t^exponent``."""
        return cls((), exponent, mode)

    @property
    def is_exact(self) -> bool:
        return self.order == INF

    def is_zero(self) -> bool:
        """True for the exact zero; a truncated empty series is ambiguous."""
        if self.terms:
            return False
        if self.is_exact:
            return True
        raise TruncationAmbiguityError(f"{self} may or may not be zero")

    def coefficient(self, e) -> Q:
        e = Q(e)
        if e >= self.order:
            raise PrecisionError(f"coefficient of t^{e} lies beyond O(t^{self.order})")
        for ex, c in self.terms:
            if ex == e:
                return c
        return Q(0)

    def valuation(self):
        """Lowest exponent of the support; ``inf`` for the exact zero."""
        if self.terms:
            return self.terms[0][0]
        if self.is_exact:
            return INF
        raise TruncationAmbiguityError(f"valuation of {self} is only known to be >= {self.order}")

    def valuation_bound(self):
        """A lower bound for the valuation; exact whenever a term is present."""
        return self.terms[0][0] if self.terms else self.order

    def leading_coefficient(self) -> Q:
        if not self.terms:
            raise TruncationAmbiguityError(f"{self} has no known leading term")
        return self.terms[0][1]

    # -- coercion ---------------------------------------------------------

    def _coerce(self, other) -> Series:
        if isinstance(other, Series):
            if other.mode is not self.mode:
                raise ModeMismatchError(f"cannot combine {self.mode.value} and {other.mode.value} series")
            return other
        if isinstance(other, Rational):
            return Series.constant(other, self.mode)
        return NotImplemented

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        order = min(self.order, other.order)
        acc = dict(t for t in self.terms if t[0] < order)
        for e, c in other.terms:
            if e < order:
                acc[e] = acc.get(e, 0) + c
        return Series._make(tuple(sorted((e, c) for e, c in acc.items() if c)), order, self.mode)

    __radd__ = __add__

    def __neg__(self) -> Series:
        return Series._make(tuple((e, -c) for e, c in self.terms), self.order, self.mode)

    def __pos__(self) -> Series:
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
        order = min(self.order + other.valuation_bound(), other.order + self.valuation_bound())
        acc: dict[Q, Q] = {}
        for ea, ca in self.terms:
            for eb, cb in other.terms:
                e = ea + eb
                if e < order:
                    acc[e] = acc.get(e, 0) + ca * cb
        return Series._make(tuple(sorted((e, c) for e, c in acc.items() if c)), order, self.mode)

    __rmul__ = __mul__

    def scale(self, c, shift=0) -> Series:
        """Return ``c * t^shift * self``."""
        c = Q(c)
        shift = _exponent(shift, self.mode)
        if c == 0:
            return Series._make((), INF, self.mode)
        return Series._make(tuple((e + shift, x * c) for e, x in self.terms), self.order + shift, self.mode)

    def _unit_part(self, depth):
        """Split ``self = c t^m (1 + u)``; ``u`` is truncated to relative order N."""
        if not self.terms:
            if self.is_exact:
                raise ZeroDivisionError("series is zero")
            raise TruncationAmbiguityError(f"{self} has no known leading term")
        m, c = self.terms[0]
        rel = self.order - m if not self.is_exact else INF
        u = Series._make(tuple((e - m, x / c) for e, x in self.terms[1:]), rel, self.mode)
        if not (u.is_exact and not u.terms):
            n = rel if rel != INF else Q(depth)
            if u.order > n:
                u = u.truncate(n)
        return c, m, u

    @staticmethod
    def _power_sum(u: Series, coeffs) -> Series:
        """``sum coeffs(k) u^k`` truncated at ``u.order`` (u has positive valuation)."""
        n = u.order
        total = power = Series._make(((Q(0), Q(1)),), n, u.mode)
        k = 0
        while True:
            k += 1
            power = (power * u).truncate(n)
            if not power.terms:
                break
            ck = coeffs(k)
            if ck:
                total = total + power.scale(ck)
        return total

    def inverse(self, depth: int = DEFAULT_DEPTH) -> Series:
        """Multiplicative inverse.

        An exact non-monomial input has an infinite expansion, which is cut at
        ``depth`` exponent units above the leading exponent.
        """
        c, m, u = self._unit_part(depth)
        if u.is_exact and not u.terms:
            return Series._make(((-m, 1 / c),), INF, self.mode)
        w = self._power_sum(u, lambda k: -1 if k % 2 else 1)
        return w.scale(1 / c, -m)

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
        if isinstance(n, int) or (isinstance(n, Q) and n.denominator == 1):
            n = int(n)
            if n < 0:
                return (self ** -n).inverse()
            result = Series.constant(1, self.mode)
            base = self
            while n:
                if n & 1:
                    result = result * base
                n >>= 1
                if n:
                    base = base * base
            return result
        return self.rational_power(Q(n))

    def rational_power(self, p: Q, depth: int = DEFAULT_DEPTH) -> Series:
        p = Q(p)
        if p.denominator == 1:
            return self ** int(p)
        if len(self.terms) == 1 and self.is_exact:
            e, c = self.terms[0]
            root = rat_root_exact(c, p.denominator)
            if root is None:
                raise NonSquareCoefficientError(f"coefficient {c} has no rational {p.denominator}-th root")
            return Series.monomial(root**p.numerator, e * p, self.mode)
        if p.denominator == 2:
            return self.sqrt(depth) ** p.numerator
        raise NonSquareCoefficientError(f"only square roots of non-monomial series are supported, got exponent {p}")

    def sqrt(self, depth: int = DEFAULT_DEPTH) -> Series:
        """Positive square root ``sqrt(c) t^(m/2) sum C(1/2, k) u^k``."""
        if not self.terms:
            if self.is_exact:
                return self
            raise TruncationAmbiguityError(f"sign of {self} is unknown")
        m, c = self.terms[0]
        if c < 0:
            raise NegativeSqrtError(f"{self} is negative")
        half = m / 2
        if self.mode is Mode.LAURENT and half.denominator != 1:
            raise NonHalvableValuationError(f"valuation {m} is odd in Laurent mode")
        root = rat_sqrt_exact(c)
        if root is None:
            raise NonSquareCoefficientError(f"leading coefficient {c} is not a rational square")
        _, _, u = self._unit_part(depth)
        if u.is_exact and not u.terms:
            return Series._make(((half, root),), INF, self.mode)
        w = self._power_sum(u, _binom_half)
        return w.scale(root, half)

    def truncate(self, new_order) -> Series:
        new_order = _order(new_order, self.mode)
        if new_order > self.order:
            raise PrecisionError(f"cannot raise known order from {self.order} to {new_order}")
        return Series._make(tuple(t for t in self.terms if t[0] < new_order), new_order, self.mode)

    # -- order ------------------------------------------------------------

    def sign(self) -> int:
        if self.terms:
            return 1 if self.terms[0][1] > 0 else -1
        if self.is_exact:
            return 0
        raise TruncationAmbiguityError(f"sign of {self} is undetermined below O(t^{self.order})")

    def compare(self, other, *, assume_exact: bool = False) -> Ordering:
        """Order ``self`` against ``other``.

        A value compared with itself is Equal even when truncated, since its
        unknown tail cancels.  Two separately computed values that merely
        print alike are not known to be equal: a difference that vanishes
        below the truncation order raises, unless ``assume_exact``.
        """
        other = self._coerce(other)
        if other is NotImplemented:
            raise TypeError(f"cannot compare Series with {type(other).__name__}")
        if self is other:
            return Ordering.EQUAL
        d = self - other
        if not d.terms and assume_exact:
            return Ordering.EQUAL
        return Ordering.from_sign(d.sign())

    def _cmp(self, other) -> int:
        if isinstance(other, Rational) and not isinstance(other, Series):
            return self._cmp_rational(Q(other))
        return {Ordering.LESS: -1, Ordering.EQUAL: 0, Ordering.GREATER: 1}[self.compare(other)]

    def _cmp_rational(self, q: Q) -> int:
        # fast path that avoids building self - q
        terms = self.terms
        if terms and terms[0][0] < 0:
            return 1 if terms[0][1] > 0 else -1
        if self.order <= 0:
            return (self - q).sign()
        st = terms[0][1] if terms and terms[0][0] == 0 else Q(0)
        if st != q:
            return 1 if st > q else -1
        rest = terms[1:] if terms and terms[0][0] == 0 else terms
        if rest:
            return 1 if rest[0][1] > 0 else -1
        if self.is_exact:
            return 0
        raise TruncationAmbiguityError(f"{self} and {q} agree below O(t^{self.order})")

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self) -> Series:
        return -self if self.sign() < 0 else self

    # -- infinitesimal structure -----------------------------------------

    def classify(self) -> Classification:
        if not self.terms and not self.is_exact:
            raise TruncationAmbiguityError(f"cannot classify {self}: zero or not is unknown")
        return Classification.from_valuation(self.valuation())

    def decompose(self) -> tuple[Q, Series]:
        """Split a finite element into (standard part, infinitesimal part)."""
        v = self.valuation_bound()
        if v < 0:
            raise NotFiniteError(f"{self} is infinitely large")
        if self.order <= 0:
            raise TruncationAmbiguityError(f"standard part of {self} is beyond the known order")
        st = self.coefficient(0)
        return st, self - st

    def standard_part(self) -> Q:
        return self.decompose()[0]

    # -- equality / display ----------------------------------------------

    def _key(self):
        return (self.terms, self.order, self.mode)

    def __eq__(self, other):
        if isinstance(other, (Series, Rational)):
            try:
                other = self._coerce(other)
            except ModeMismatchError:
                return False
            return self._key() == other._key()
        return NotImplemented

    def __hash__(self):
        if self.is_exact and not self.terms:
            return hash(0)
        if self.is_exact and len(self.terms) == 1 and self.terms[0][0] == 0:
            return hash(self.terms[0][1])
        return hash(self._key())

    def to_string(self, var: str = "t") -> str:
        parts: list[tuple[bool, str]] = []
        for e, c in self.terms:
            mag = abs(c)
            mono = format_monomial(e, var)
            if e == 0:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            parts.append((c < 0, body))
        if not self.is_exact:
            parts.append((False, f"O({format_monomial(self.order, var)})"))
        if not parts:
            return "0"
        neg, body = parts[0]
        out = ("-" if neg else "") + body
        for neg, body in parts[1:]:
            out += (" - " if neg else " + ") + body
        return out

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Series({self.to_string()!r}, mode={self.mode.value})"


def series_add(a: Series, b: Series) -> Series:
    return a + b


def series_mul(a: Series, b: Series) -> Series:
    return a * b


def series_inv(a: Series, depth: int = DEFAULT_DEPTH) -> Series:
    return a.inverse(depth)


def series_sign_cmp(a: Series, b: Series, *, assume_exact: bool = False) -> Ordering:
    return a.compare(b, assume_exact=assume_exact)


def series_valuation(a: Series):
    return a.valuation()


def series_classify(a: Series) -> Classification:
    return a.classify()


def series_decompose(a: Series) -> tuple[Q, Series]:
    return a.decompose()


def series_sqrt(a: Series, depth: int = DEFAULT_DEPTH) -> Series:
    return a.sqrt(depth)


def series_truncate(a: Series, new_order) -> Series:
    return a.truncate(new_order)


def agree(a: Series, b: Series) -> bool:
    """Equal as far as both are known: compare after truncating to the common order."""
    n = min(a.order, b.order)
    if n == INF:
        return a.terms == b.terms
    return a.truncate(n).terms == b.truncate(n).terms
