"""Hypothesis strategies for field elements."""

from fractions import Fraction

from hypothesis import strategies as st

from ordfield import Mode, Polynomial, RationalFunction, RFMode, Series
from ordfield.series import INF

small_ints = st.integers(-9, 9)
rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_coeffs = st.builds(Fraction, st.integers(1, 9) | st.integers(-9, -1), st.integers(1, 5))


def exponents(mode: Mode, lo=-3, hi=6):
    if mode is Mode.LAURENT:
        return st.integers(lo, hi).map(Fraction)
    return st.builds(lambda n, d: Fraction(n, d), st.integers(lo * 2, hi * 2), st.sampled_from([1, 2, 3]))


@st.composite
def series(draw, mode=Mode.LAURENT, lo=-3, hi=6, exact=None, nonzero=False):
    terms = draw(st.dictionaries(exponents(mode, lo, hi), nonzero_coeffs, min_size=1 if nonzero else 0, max_size=5))
    is_exact = draw(st.booleans()) if exact is None else exact
    if is_exact:
        return Series(terms, INF, mode)
    top = max(terms, default=Fraction(lo))
    return Series(terms, top + draw(exponents(mode, 1, 3)), mode)


@st.composite
def polynomials(draw, max_deg=3, nonzero=False):
    cs = draw(st.lists(rationals, min_size=1, max_size=max_deg + 1))
    p = Polynomial(cs)
    if nonzero and p.is_zero():
        p = Polynomial([1])
    return p


@st.composite
def ratfuncs(draw, mode=RFMode.AT_INFINITY, max_deg=2):
    return RationalFunction(draw(polynomials(max_deg)), draw(polynomials(max_deg, nonzero=True)), mode)
