"""Seeded random element generators shared by the acceptance suite."""

import random
from fractions import Fraction

from ordfield import Mode, Polynomial, RationalFunction, RFMode, Series
from ordfield.series import INF


def rand_coeff(rng: random.Random) -> Fraction:
    return Fraction(rng.choice([-1, 1]) * rng.randint(1, 9), rng.randint(1, 4))


def rand_exponent(rng: random.Random, mode: Mode, lo=-3, hi=5) -> Fraction:
    if mode is Mode.LAURENT:
        return Fraction(rng.randint(lo, hi))
    d = rng.choice([1, 2, 3])
    return Fraction(rng.randint(lo * d, hi * d), d)


def rand_series(rng, mode=Mode.LAURENT, *, lo=-3, hi=5, max_terms=4, truncated=0.5) -> Series:
    """Random nonzero series; with probability ``truncated`` it carries an O(t^n) tail."""
    n = rng.randint(1, max_terms)
    terms = {rand_exponent(rng, mode, lo, hi): rand_coeff(rng) for _ in range(n)}
    order = INF
    if rng.random() < truncated:
        order = max(terms) + rand_exponent(rng, mode, 1, 3)
    return Series(terms, order, mode)


def rand_poly(rng, max_deg=2, nonzero=True) -> Polynomial:
    while True:
        p = Polynomial(Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(rng.randint(1, max_deg + 1)))
        if not (nonzero and p.is_zero()):
            return p


def rand_ratfunc(rng, mode=RFMode.AT_INFINITY, max_deg=2) -> RationalFunction:
    return RationalFunction(rand_poly(rng, max_deg), rand_poly(rng, max_deg), mode)
