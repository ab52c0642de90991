"""Exact arithmetic in ordered non-Archimedean fields.

Truncated Laurent / Levi-Civita series and rational functions over Q, with
valuations, infinitesimal classification, the valuation ultrametric,
finite-scale completeness probes, and constructive algorithms over Q.
"""

from .base import (
    Classification,
    ContractViolation,
    ModeMismatchError,
    NegativeSqrtError,
    NonHalvableValuationError,
    NonSquareCoefficientError,
    NotFiniteError,
    OrderedFieldError,
    Ordering,
    PrecisionError,
    TruncationAmbiguityError,
)
from .fields import FieldTag, q_embed
from .ratfunc import Polynomial, RationalFunction, RFMode
from .rational import Q
from .series import DEFAULT_DEPTH, Mode, Series

__all__ = [
    "Classification",
    "ContractViolation",
    "DEFAULT_DEPTH",
    "FieldTag",
    "Mode",
    "ModeMismatchError",
    "NegativeSqrtError",
    "NonHalvableValuationError",
    "NonSquareCoefficientError",
    "NotFiniteError",
    "OrderedFieldError",
    "Ordering",
    "Polynomial",
    "PrecisionError",
    "Q",
    "RFMode",
    "RationalFunction",
    "Series",
    "TruncationAmbiguityError",
    "q_embed",
]
