"""Residual table for the supremum-based square root iteration.

Also reports how fast the exact (unrounded) iterates grow, which is why the
library rounds each step down to a short dyadic by default.
"""

import argparse
from dataclasses import dataclass
from fractions import Fraction

from ordfield.archimedean import sqrt_sup_iterate


@dataclass(frozen=True)
class Config:
    a: Fraction = Fraction(2)
    tol: Fraction = Fraction(1, 1000)
    max_iter: int = 100
    step_bits: int = 64
    exact_steps: int = 10


def size(q) -> int:
    return int(q.numerator).bit_length() + int(q.denominator).bit_length()


def main(cfg: Config):
    tr = sqrt_sup_iterate(cfg.a, cfg.tol, cfg.max_iter, cfg.step_bits)
    print(f"a = {cfg.a}, tol = {cfg.tol}: {len(tr.steps) - 1} steps, {tr.reason.value}")
    print(f"{'step':>4}  {'s':>14}  {'s^2 - a':>12}  {'bits':>5}")
    for i, (s, r) in enumerate(tr.steps):
        print(f"{i:4d}  {float(s):14.10f}  {float(r):12.3e}  {size(s):5d}")
    exact = sqrt_sup_iterate(cfg.a, Fraction(1, 10**100), cfg.exact_steps, None)
    print("exact steps, bit size of s:", [size(s) for s, _ in exact.steps])


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--a", type=Fraction, default=Config.a)
    ap.add_argument("--tol", type=Fraction, default=Config.tol)
    ap.add_argument("--max-iter", type=int, default=Config.max_iter)
    ap.add_argument("--step-bits", type=int, default=Config.step_bits)
    ap.add_argument("--exact-steps", type=int, default=Config.exact_steps)
    main(Config(**vars(ap.parse_args())))
