"""Shared result types and the exception hierarchy."""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Ordering(enum.Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"

    def __str__(self) -> str:
        return self.value

    @classmethod
    def from_sign(cls, sign: int) -> Ordering:
        if sign < 0:
            return cls.LESS
        if sign > 0:
            return cls.GREATER
        return cls.EQUAL


@dataclass(frozen=True)
class Classification:
    """Which of zero / infinitesimal / finite / infinite an element is."""

    is_zero: bool
    infinitesimal: bool
    finite: bool
    infinite: bool

    def __post_init__(self):
        if self.infinitesimal and not self.finite:
            raise ValueError("an infinitesimal element must be finite")
        if self.finite == self.infinite:
            raise ValueError("exactly one of finite/infinite must hold")

    @classmethod
    def from_valuation(cls, v) -> Classification:
        # v is +inf for zero; finite otherwise
        return cls(
            is_zero=v == float("inf"),
            infinitesimal=v > 0,
            finite=v >= 0,
            infinite=v < 0,
        )


class OrderedFieldError(Exception):
    """Base class for domain errors (bad inputs to a mathematical operation)."""


class ModeMismatchError(OrderedFieldError, TypeError):
    pass


class TruncationAmbiguityError(OrderedFieldError):
    """The answer depends on coefficients beyond the known truncation order."""


class PrecisionError(OrderedFieldError):
    """Requested more precision than an element carries."""


class NotFiniteError(OrderedFieldError):
    pass


class SqrtError(OrderedFieldError):
    pass


class NegativeSqrtError(SqrtError):
    pass


class NonHalvableValuationError(SqrtError):
    pass


class NonSquareCoefficientError(SqrtError):
    pass


class ContractViolation(OrderedFieldError):
    """A caller-supplied precondition turned out to be false during a run."""
