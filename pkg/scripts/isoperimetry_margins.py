#!/usr/bin/env python3
"""Margin statistics for both isoperimetric inequalities over a seeded
random-polygon corpus, plus the rearrangement gain distribution.

Usage: python3 scripts/isoperimetry_margins.py [count] [seed]
"""

import math
import random
import sys

from matchstick.isoperimetry import (DirectionSet, check_classic, check_hexagonal,
                                     convexify_rearrangement, random_simple_polygon)


def summarize(name, values):
    values = sorted(values)
    n = len(values)
    print(f"{name:>18}: min {values[0]:.6g}  median {values[n // 2]:.6g}  "
          f"max {values[-1]:.6g}")


def main():
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 0
    rng = random.Random(seed)
    classic, hexagonal, gains = [], [], []
    for _ in range(count):
        p = random_simple_polygon(rng)
        classic.append(check_classic(p)["margin"])
        d = DirectionSet(rng.uniform(0.0, math.pi))
        hexagonal.append(check_hexagonal(p, d)["margin"])
        gains.append(convexify_rearrangement(p).area - p.area)
    print(f"corpus: {count} polygons, seed {seed}")
    summarize("classic margin", classic)
    summarize("hexagonal margin", hexagonal)
    summarize("convexify gain", gains)
    assert min(classic) > 0 and min(hexagonal) >= -1e-9 and min(gains) >= -1e-12


if __name__ == "__main__":
    main()
