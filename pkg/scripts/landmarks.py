"""Print the Laurent expansions of t/(1-t) and 1/(t-t^2) with their classification."""

import argparse
from dataclasses import dataclass

from ordfield import RationalFunction, RFMode


@dataclass(frozen=True)
class Config:
    depth: int = 16


def main(cfg: Config):
    t = RationalFunction.variable(RFMode.AT_ZERO)
    for name, f in (("t/(1-t)", t / (1 - t)), ("1/(t-t^2)", 1 / (t - t * t))):
        c = f.classify()
        kind = "infinitesimal" if c.infinitesimal else "infinite" if c.infinite else "finite"
        print(f"{name:>10} = {f.laurent_at_zero(cfg.depth)}")
        print(f"{'':>10}   valuation {f.valuation()}, {kind}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=Config.depth)
    main(Config(**vars(ap.parse_args())))
