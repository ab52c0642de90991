"""Finite-scale probes of completeness properties of ordered fields.

Each probe either constructs a witness and re-verifies it against the probed
predicate, or exhibits a finite counterexample.  Statements about infinite
families or sequences cannot be settled at finite scale and come back as
``Inconclusive``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .base import OrderedFieldError
from .fields import FieldTag, classify, q_embed, standard_part
from .rational import Q
from .report import ProbeReport, Verdict

DEFAULT_SCAN_BOUND = 10**6


class FIPError(OrderedFieldError):
    """The family has no common point."""


class InvalidRhoError(OrderedFieldError):
    def __init__(self, msg: str, pair: tuple[int, int] | None = None):
        super().__init__(msg)
        self.pair = pair


@dataclass(frozen=True)
class ClosedInterval:
    lo: object
    hi: object

    def __post_init__(self):
        if self.hi < self.lo:
            raise ValueError(f"empty closed interval [{self.lo}, {self.hi}]")

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    @property
    def width(self):
        return self.hi - self.lo

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


@dataclass(frozen=True)
class OpenInterval:
    lo: object
    hi: object

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty open interval ({self.lo}, {self.hi})")

    def __contains__(self, x) -> bool:
        return self.lo < x < self.hi

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi})"


def _max(xs):
    best = xs[0]
    for x in xs[1:]:
        if x > best:
            best = x
    return best


def _min(xs):
    best = xs[0]
    for x in xs[1:]:
        if x < best:
            best = x
    return best


def fip_check(family: list[ClosedInterval]) -> bool:
    """Finite intersection property; for intervals, max lo <= min hi."""
    if not family:
        raise ValueError("empty family")
    return _max([i.lo for i in family]) <= _min([i.hi for i in family])


def cantor_point_finite(family: list[ClosedInterval]):
    if not fip_check(family):
        raise FIPError("intervals have empty intersection")
    point = _max([i.lo for i in family])
    for k, iv in enumerate(family):
        if point not in iv:
            raise AssertionError(f"constructed point {point} is outside interval {k}")
    return point


def open_fip_point(family: list[OpenInterval], rho):
    """Common point of open intervals, shrunk inward by rho/2.

    ``rho`` must be positive and at most every gap ``hi_l - lo_k``.
    """
    if not family:
        raise ValueError("empty family")
    if not rho > 0:
        raise InvalidRhoError(f"rho = {rho} is not positive")
    for l, bl in enumerate(family):
        for k, ak in enumerate(family):
            if not rho <= bl.hi - ak.lo:
                raise InvalidRhoError(
                    f"rho = {rho} exceeds hi[{l}] - lo[{k}] = {bl.hi - ak.lo}", (l, k)
                )
    half = rho / 2
    zeta = _max([iv.lo for iv in family]) + half
    for k, iv in enumerate(family):
        if not (iv.lo + half <= zeta <= iv.hi - half and zeta in iv):
            raise AssertionError(f"constructed point {zeta} escapes interval {k}")
    return zeta


def cauchy_probe(prefix: list, thresholds: list) -> ProbeReport:
    """For each eps, the least 1-based N with every pair in prefix[N:] closer than eps.

    Only tails of at least two terms count, so a lone last term never
    certifies anything.
    """
    if not prefix:
        raise ValueError("empty prefix")
    n = len(prefix)
    # spread[N] = max - min over prefix[N-1:], for N = 1 .. n-1
    spread = {}
    hi = lo = prefix[-1]
    for i in range(n - 2, -1, -1):
        x = prefix[i]
        if x > hi:
            hi = x
        if x < lo:
            lo = x
        spread[i + 1] = hi - lo
    witness, trace = [], []
    resolved = True
    for eps in thresholds:
        if not eps > 0:
            raise ValueError(f"threshold {eps} is not positive")
        best = None
        for N in range(n - 1, 0, -1):
            if spread[N] < eps:
                best = N
            else:
                break
        if best is None:
            resolved = False
            trace.append(f"eps={eps}: no N within prefix of length {n}")
        else:
            witness.append(best)
            trace.append(f"eps={eps}: N={best}")
    if n == 1:
        trace.append("prefix has a single term")
    if resolved and n > 1:
        return ProbeReport("cauchy", Verdict.WITNESS, witness, trace)
    return ProbeReport("cauchy", Verdict.INCONCLUSIVE, [], trace)


def archimedean_probe(x, bound: int = DEFAULT_SCAN_BOUND) -> ProbeReport:
    """Least natural n with |x| < n, or evidence that |x| exceeds every n <= bound."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    ax = abs(x)
    if classify(x).infinite:
        for n in range(1, bound + 1):
            if not ax > n:
                raise AssertionError(f"infinite element {x} is below {n}")
        return ProbeReport(
            "archimedean",
            Verdict.COUNTEREXAMPLE,
            [x],
            [f"|x| > n for every n in 1..{bound}", "valuation is negative: no natural bounds |x|"],
        )
    k = math.floor(standard_part(ax))
    n = k if k >= 1 and ax < k else k + 1
    if not ax < n or (n > 1 and ax < n - 1):
        raise AssertionError(f"witness {n} for {x} failed re-check")
    trace = [f"standard part of |x| is {standard_part(ax)}"]
    if n <= bound:
        first = next(m for m in range(1, n + 1) if ax < m)
        if first != n:
            raise AssertionError(f"scan found {first}, shortcut found {n}")
        trace.append(f"scan 1..{n} confirms least n = {n}")
    else:
        trace.append(f"witness {n} exceeds scan bound {bound}; not scanned")
    return ProbeReport("archimedean", Verdict.WITNESS, [n], trace)


def gen_unbounded_increasing(n: int, field: FieldTag | str = FieldTag.LAURENT) -> list:
    """t^-1, t^-2, ..., t^-n (x, x^2, ... in the at-infinity ordering)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    field = FieldTag(field)
    if field.archimedean:
        raise ValueError("Q has no infinitely large elements")
    unit = field.infinite_unit()
    out, cur = [], unit
    for _ in range(n):
        out.append(cur)
        cur = cur * unit
    return out


def bounded_naturals_probe(n: int, field: FieldTag | str = FieldTag.LAURENT) -> ProbeReport:
    """Check whether 1..n share an upper bound from the field.

    In a non-Archimedean field t^-1 bounds all of them.  In Q every
    candidate bound b is beaten by the natural floor(b) + 1.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    field = FieldTag(field)
    if field.archimedean:
        for b in range(1, n + 1):
            beaten = math.floor(Q(b)) + 1
            if not q_embed(beaten, field) > b:
                raise AssertionError("natural failed to exceed its candidate bound")
        return ProbeReport(
            "naturals-bounded",
            Verdict.COUNTEREXAMPLE,
            [n + 1],
            [f"each candidate bound b in 1..{n} is exceeded by the natural b + 1", "Q is Archimedean"],
        )
    bound = field.infinite_unit()
    for k in range(1, n + 1):
        if not bound > k:
            raise AssertionError(f"{bound} does not exceed {k}")
    return ProbeReport(
        "naturals-bounded", Verdict.WITNESS, [bound], [f"k < {bound} for every k in 1..{n}"]
    )
