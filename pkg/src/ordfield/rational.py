"""Exact rational coefficients.

``Q`` (gmpy2's ``mpq``) is the rational type throughout the package.  It
is a registered ``numbers.Rational``, compares and hashes equal to
``fractions.Q`` and prints the same way, so either may be passed in.
"""

from __future__ import annotations

import math
import operator
import re
from numbers import Rational

from gmpy2 import mpq as Q

from .base import Ordering

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*\Z")


def as_fraction(x) -> Q:
    if type(x) is Q:
        return x
    if isinstance(x, Rational):
        return Q(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}")


def rat_arith(a, b, op: str) -> Q:
    """Apply ``op`` (add, sub, mul, div) exactly; div by zero raises ZeroDivisionError."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    return fn(as_fraction(a), as_fraction(b))


def rat_cmp(a, b) -> Ordering:
    a, b = as_fraction(a), as_fraction(b)
    lhs = a.numerator * b.denominator
    rhs = b.numerator * a.denominator
    return Ordering.from_sign((lhs > rhs) - (lhs < rhs))


def rat_sqrt_exact(a) -> Q | None:
    """Exact square root of ``a`` if numerator and denominator are perfect squares."""
    a = as_fraction(a)
    if a < 0:
        raise ValueError(f"square root of negative rational {a}")
    p, q = math.isqrt(a.numerator), math.isqrt(a.denominator)
    if p * p == a.numerator and q * q == a.denominator:
        return Q(p, q)
    return None


def rat_root_exact(a, n: int) -> Q | None:
    """Exact n-th root (n >= 1) of a rational, or None."""
    a = as_fraction(a)
    if n == 1:
        return a
    if a < 0:
        if n % 2 == 0:
            return None
        r = rat_root_exact(-a, n)
        return None if r is None else -r

    def iroot(k: int) -> int | None:
        r = int(round(int(k) ** (1.0 / n))) if k < 2**900 else _int_root(int(k), n)
        for c in (r - 1, r, r + 1):
            if c >= 0 and c**n == k:
                return c
        return None

    p, q = iroot(a.numerator), iroot(a.denominator)
    if p is None or q is None:
        return None
    return Q(p, q)


def _int_root(k: int, n: int) -> int:
    lo, hi = 0, 1 << (k.bit_length() // n + 1)
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**n <= k:
            lo = mid
        else:
            hi = mid - 1
    return lo


def parse_rational(text: str) -> Q:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(f"not a rational literal: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Q(int(num), int(den) if den else 1)


def format_rational(q) -> str:
    # str(Q) already gives "p/q" with q omitted when 1
    return str(as_fraction(q))
