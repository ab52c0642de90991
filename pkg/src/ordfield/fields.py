"""Field selection and operations that work uniformly across element types.

Elements are ``Q`` (the Archimedean field Q), :class:`Series`, or
:class:`RationalFunction`; all three support the arithmetic and comparison
operators, so most code only needs the helpers below for the few places
where they differ.
"""

from __future__ import annotations

import enum
from numbers import Rational

from .base import Classification
from .ratfunc import RationalFunction, RFMode
from .rational import Q
from .series import INF, Mode, Series


class FieldTag(enum.Enum):
    Q = "q"
    LAURENT = "laurent"
    LEVI_CIVITA = "lc"
    RATFUNC_INF = "ratfunc-inf"
    RATFUNC_ZERO = "ratfunc-zero"

    @property
    def archimedean(self) -> bool:
        return self is FieldTag.Q

    @property
    def var(self) -> str:
        return "x" if self is FieldTag.RATFUNC_INF else "t"

    def embed(self, q) -> Q | Series | RationalFunction:
        return q_embed(q, self)

    def indeterminate(self):
        """The positive infinitesimal t, or x for the at-infinity ordering."""
        if self is FieldTag.Q:
            raise ValueError("Q has no indeterminate")
        if self is FieldTag.LAURENT:
            return Series.monomial(1, 1, Mode.LAURENT)
        if self is FieldTag.LEVI_CIVITA:
            return Series.monomial(1, 1, Mode.LEVI_CIVITA)
        if self is FieldTag.RATFUNC_INF:
            return RationalFunction.variable(RFMode.AT_INFINITY)
        return RationalFunction.variable(RFMode.AT_ZERO)

    def infinite_unit(self):
        """A canonical positive infinitely large element (t^-1, or x)."""
        if self is FieldTag.RATFUNC_INF:
            return self.indeterminate()
        return self.indeterminate() ** -1


def q_embed(q, field: FieldTag | str):
    """Canonical image of a rational in ``field``."""
    q = Q(q)
    field = FieldTag(field)
    if field is FieldTag.Q:
        return q
    if field is FieldTag.LAURENT:
        return Series.constant(q, Mode.LAURENT)
    if field is FieldTag.LEVI_CIVITA:
        return Series.constant(q, Mode.LEVI_CIVITA)
    if field is FieldTag.RATFUNC_INF:
        return RationalFunction.constant(q, RFMode.AT_INFINITY)
    return RationalFunction.constant(q, RFMode.AT_ZERO)


def field_of(x) -> FieldTag:
    if isinstance(x, Series):
        return FieldTag.LAURENT if x.mode is Mode.LAURENT else FieldTag.LEVI_CIVITA
    if isinstance(x, RationalFunction):
        return FieldTag.RATFUNC_INF if x.mode is RFMode.AT_INFINITY else FieldTag.RATFUNC_ZERO
    if isinstance(x, Rational):
        return FieldTag.Q
    raise TypeError(f"not a field element: {x!r}")


def valuation(x):
    """Canonical valuation; on Q this is the trivial valuation."""
    if isinstance(x, (Series, RationalFunction)):
        return x.valuation()
    return INF if x == 0 else Q(0)


def classify(x) -> Classification:
    if isinstance(x, (Series, RationalFunction)):
        return x.classify()
    return Classification(is_zero=x == 0, infinitesimal=x == 0, finite=True, infinite=False)


def standard_part(x) -> Q:
    if isinstance(x, (Series, RationalFunction)):
        return x.standard_part()
    return Q(x)


def sign(x) -> int:
    if isinstance(x, (Series, RationalFunction)):
        return x.sign()
    return (x > 0) - (x < 0)


def to_text(x) -> str:
    return str(x)
