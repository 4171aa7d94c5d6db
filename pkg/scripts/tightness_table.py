#!/usr/bin/env python3
"""Tabulate the edge bound floor(3n - sqrt(12n-3)) against the spiral
construction for n up to a limit (default 200).

Usage: python3 scripts/tightness_table.py [N]
"""

import sys
import time

from matchstick.builders import build_extremal
from matchstick.lattice import harborth_bound, phi


def main():
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    t0 = time.perf_counter()
    misses = 0
    print(f"{'n':>5} {'bound':>6} {'built':>6} {'phi(n)':>10}  tight")
    for n in range(1, limit + 1):
        g = build_extremal(n)
        bound = harborth_bound(n)
        tight = g.e == bound
        misses += not tight
        if n <= 20 or n % 25 == 0 or not tight:
            print(f"{n:>5} {bound:>6} {g.e:>6} {phi(n):>10.4f}  {tight}")
    dt = time.perf_counter() - t0
    print(f"\n{limit} graphs in {dt:.2f}s; misses: {misses}")
    return 1 if misses else 0


if __name__ == "__main__":
    sys.exit(main())
