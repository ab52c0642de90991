"""The valuation ultrametric d(x, y) = exp(-v(x - y)) and its closed balls.

Every decision is made on exact valuation levels; the real number
``exp(-level)`` is carried along only for display.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .base import OrderedFieldError, TruncationAmbiguityError
from .fields import valuation
from .rational import Q
from .series import INF, Series


class NotNestedError(OrderedFieldError):
    def __init__(self, outer: int, inner: int, why: str):
        super().__init__(f"ball {inner} is not nested in ball {outer}: {why}")
        self.pair = (outer, inner)


class Distance(NamedTuple):
    level: Q | float
    display: float

    def display_text(self) -> str:
        return f"{self.display:.5g}"


def _level_bound(d) -> tuple[Q | float, bool]:
    """(lower bound on v(d), whether it is exact)."""
    if isinstance(d, Series) and not d.terms and not d.is_exact:
        return d.order, False
    return valuation(d), True


def metric_distance(x, y) -> Distance:
    level, exact = _level_bound(x - y)
    if not exact:
        raise TruncationAmbiguityError(f"x - y vanishes below O(t^{level}); distance unknown")
    display = 0.0 if level == INF else math.exp(-level)
    return Distance(level, display)


@dataclass(frozen=True)
class ClosedBall:
    """All y with v(y - center) >= level."""

    center: object
    level: Q

    def __post_init__(self):
        object.__setattr__(self, "level", Q(self.level))

    @property
    def radius(self) -> float:
        return math.exp(-self.level)

    def __contains__(self, x) -> bool:
        return ball_contains(self, x)


def ball_contains(ball: ClosedBall, x) -> bool:
    level, exact = _level_bound(x - ball.center)
    if level >= ball.level:
        return True
    if exact:
        return False
    raise TruncationAmbiguityError(
        f"membership in ball at level {ball.level} is undecided: difference known only below {level}"
    )


def nested_ball_point(chain: list[ClosedBall]):
    """A point in every ball of a finite nested chain: the innermost center."""
    if not chain:
        raise ValueError("empty chain of balls")
    for i in range(len(chain) - 1):
        outer, inner = chain[i], chain[i + 1]
        if inner.level < outer.level:
            raise NotNestedError(i, i + 1, f"level {inner.level} < {outer.level}")
        if not ball_contains(outer, inner.center):
            raise NotNestedError(i, i + 1, "center lies outside the enclosing ball")
    point = chain[-1].center
    for i, ball in enumerate(chain):
        if not ball_contains(ball, point):
            raise AssertionError(f"nested point escaped ball {i}")
    return point
