"""Constructive procedures over Q: sup-based square roots, dyadic suprema,
bisection for sign changes, and Bolzano-Weierstrass interval halving."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

from .base import ContractViolation, OrderedFieldError
from .completeness import ClosedInterval
from .ratfunc import Polynomial
from .rational import Q
from .report import ProbeReport, Verdict


class StopReason(enum.Enum):
    TOLERANCE_MET = "ToleranceMet"
    MAX_ITERATIONS = "MaxIterations"


@dataclass
class IterationTrace:
    steps: list[tuple[Q, Q]] = field(default_factory=list)
    terminated: bool = False
    reason: StopReason = StopReason.MAX_ITERATIONS

    @property
    def final(self) -> Q:
        return self.steps[-1][0]

    def to_report(self, name: str = "sqrt-iter") -> ProbeReport:
        verdict = Verdict.WITNESS if self.terminated else Verdict.INCONCLUSIVE
        trace = [f"step {i}: s = {s}, s^2 - a = {r}" for i, (s, r) in enumerate(self.steps)]
        trace.append(f"stop: {self.reason.value}")
        return ProbeReport(name, verdict, [self.final], trace)


def _round_down_dyadic(h: Q, bits: int) -> Q:
    """Largest multiple of a power of two that is <= h, keeping ~bits significant bits."""
    shift = bits - (h.numerator.bit_length() - h.denominator.bit_length())
    if shift >= 0:
        return Q((h.numerator << shift) // h.denominator, 1 << shift)
    return Q(h.numerator // (h.denominator << -shift) << -shift)


def sqrt_sup_iterate(a, tol, max_iter: int = 100, step_bits: int | None = 64) -> IterationTrace:
    """Approach sqrt(a) with the two correction steps from the supremum argument.

    Below the root: s += 1/2 min{(a - s^2)/(s + 1)^2, 1}.
    Above the root: s -= (s^2 - a) / (2 (s + 1)^2).

    Exact steps roughly triple the size of s every iteration, so by default
    each step h is rounded down to a dyadic with ``step_bits`` significant
    bits.  Any step in (0, h] keeps s on the same side of the root, so the
    invariants below still hold.  ``step_bits=None`` takes the exact steps.
    """
    a, tol = Q(a), Q(tol)
    if a <= 0:
        raise OrderedFieldError(f"a = {a} must be positive")
    if tol <= 0:
        raise OrderedFieldError(f"tol = {tol} must be positive")
    s = min(a, Q(1))
    res = s * s - a
    trace = IterationTrace([(s, res)])
    for _ in range(max_iter):
        if abs(res) <= tol:
            break
        if res < 0:
            h = min((a - s * s) / (s + 1) ** 2, Q(1)) / 2
        else:
            h = (s * s - a) / (2 * (s + 1) ** 2)
        if step_bits is not None:
            h = _round_down_dyadic(h, step_bits)
        new = s + h if res < 0 else s - h
        new_res = new * new - a
        if (res < 0) != (new_res < 0) or h <= 0 or abs(new_res) >= abs(res):
            raise AssertionError(f"branch invariant broken at s = {s}")
        s, res = new, new_res
        trace.steps.append((s, res))
    if abs(res) <= tol:
        trace.terminated, trace.reason = True, StopReason.TOLERANCE_MET
    return trace


def dyadic_sup(is_upper_bound: Callable[[Q], bool], m: int, M: int, P: int) -> list[Q]:
    """Decreasing dyadic upper bounds a_p = k_p / 2^p converging to sup S.

    ``is_upper_bound`` must be pure and monotone, ``m`` must not be an upper
    bound and ``M`` must be.  k_p is the least k <= 2^p M with k / 2^p an
    upper bound; after the first level only 2k_{p-1} - 1 needs testing.
    """
    if not is_upper_bound(Q(M)):
        raise ContractViolation(f"M = {M} is not an upper bound")
    if is_upper_bound(Q(m)):
        raise ContractViolation(f"m = {m} is already an upper bound")
    k = next(j for j in range(m + 1, M + 1) if is_upper_bound(Q(j)))
    out = [Q(k)]
    for p in range(1, P + 1):
        scale = 1 << p
        c = 2 * k - 1
        k = c if is_upper_bound(Q(c, scale)) else 2 * k
        if is_upper_bound(Q(k - 1, scale)):
            raise ContractViolation(f"predicate is not monotone near {Q(k - 1, scale)}")
        out.append(Q(k, scale))
    return out


def dyadic_sup_report(is_upper_bound, m: int, M: int, P: int, name: str = "dyadic-sup") -> ProbeReport:
    seq = dyadic_sup(is_upper_bound, m, M, P)
    trace = [f"a_{p} = {a}" for p, a in enumerate(seq)]
    return ProbeReport(name, Verdict.WITNESS, [seq[-1]], trace)


class SignChangeError(OrderedFieldError):
    pass


def bisect_ivt(p: Polynomial | Callable, a, b, iters: int) -> ClosedInterval:
    """Halve [a, b] ``iters`` times, keeping p(lo) p(hi) <= 0."""
    lo, hi = Q(a), Q(b)
    if not lo < hi:
        raise OrderedFieldError(f"need a < b, got [{lo}, {hi}]")
    flo, fhi = p(lo), p(hi)
    if flo * fhi > 0:
        raise SignChangeError(f"p({lo}) = {flo} and p({hi}) = {fhi} have the same sign")
    for _ in range(iters):
        mid = (lo + hi) / 2
        fmid = p(mid)
        if flo * fmid <= 0:
            hi, fhi = mid, fmid
        else:
            lo, flo = mid, fmid
    return ClosedInterval(lo, hi)


class BWSelection(NamedTuple):
    indices: list[int]
    intervals: list[ClosedInterval]
    exhausted: bool


def bw_select(prefix: list, a, b, K: int) -> BWSelection:
    """Select K nested halvings of [a, b] and indices n_1 < n_2 < ... of prefix.

    At each split the half holding more of the remaining terms wins (ties go
    left).  ``exhausted`` is set when the prefix runs out before K levels.
    Indices are 0-based.
    """
    if not prefix:
        raise ValueError("empty prefix")
    a, b = Q(a), Q(b)
    for i, x in enumerate(prefix):
        if not a <= x <= b:
            raise ValueError(f"prefix[{i}] = {x} lies outside [{a}, {b}]")
    box = ClosedInterval(a, b)
    indices, intervals = [0], [box]
    while len(indices) < K:
        mid = (box.lo + box.hi) / 2
        left, right = ClosedInterval(box.lo, mid), ClosedInterval(mid, box.hi)
        after = range(indices[-1] + 1, len(prefix))
        in_left = [n for n in after if prefix[n] in left]
        in_right = [n for n in after if prefix[n] in right]
        if not in_left and not in_right:
            return BWSelection(indices, intervals, True)
        if len(in_left) >= len(in_right):
            box, nxt = left, in_left[0]
        else:
            box, nxt = right, in_right[0]
        indices.append(nxt)
        intervals.append(box)
    return BWSelection(indices, intervals, False)
