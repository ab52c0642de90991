"""Dyadic upper bounds a_p for sup {q : q^2 < a} and the error bound 2^(2-p)."""

import argparse
import math
from dataclasses import dataclass
from fractions import Fraction

from ordfield.archimedean import dyadic_sup


@dataclass(frozen=True)
class Config:
    a: Fraction = Fraction(2)
    levels: int = 20


def main(cfg: Config):
    a = cfg.a
    M = max(1, math.ceil(a))
    seq = dyadic_sup(lambda q: q > 0 and q * q >= a, 0, M, cfg.levels)
    print(f"{'p':>3}  {'a_p':>16}  {'a_p^2 - a':>12}  {'2^(2-p)':>10}")
    for p, x in enumerate(seq):
        print(f"{p:3d}  {str(x):>16}  {float(x * x - a):12.4e}  {2.0 ** (2 - p):10.4e}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", type=Fraction, default=Config.a)
    ap.add_argument("--levels", type=int, default=Config.levels)
    main(Config(**vars(ap.parse_args())))
