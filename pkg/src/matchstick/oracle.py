"""Brute-force ground-truth engines.

``max_edges_lattice`` exhaustively maximizes the unit-edge count over all
connected n-point subsets of the triangular lattice (n <= 12), enumerating
translation classes once each with the untranslated-anchor growth technique
(no set is ever revisited, so no canonical-form deduplication is needed
during the search).  ``max_area_rearrangement`` exhausts edge orderings of a
small polygon to certify the convex rearrangement.  ``unit_pair_fuzz`` checks
floating circle-circle intersections against the exact lattice prediction.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache

from .geometry import cross, dot, segment_distance, shoelace2
from .lattice import (UNIT_RING, BudgetError, EisensteinPoint,
                      complete_unit_pair)

MAX_ORACLE_N = 12
MAX_ORACLE_EDGES = 8


@dataclass(frozen=True)
class CanonicalPointSet:
    """Lattice point set normalized under translation and the 12-element
    lattice symmetry group (6 rotations x reflection): the lexicographically
    smallest translated image over all 12 transforms."""

    points: tuple

    def __len__(self):
        return len(self.points)


def canonicalize(points) -> CanonicalPointSet:
    pts = list(points)
    best = None
    for reflected in (False, True):
        current = [p.reflect() for p in pts] if reflected else list(pts)
        for _ in range(6):
            current = [p.rot60() for p in current]
            mmin = min(p.m for p in current)
            nmin = min(p.n for p in current)
            image = tuple(sorted(EisensteinPoint(p.m - mmin, p.n - nmin)
                                 for p in current))
            if best is None or image < best:
                best = image
    return CanonicalPointSet(points=best)


# ---------------------------------------------------------------------------
# exhaustive max-edge search


_STRIDE = 64
_OFF = 32
_NEIGH_OFFS = tuple(d.m * _STRIDE + d.n for d in UNIT_RING)


def _encode(p: EisensteinPoint) -> int:
    return (p.m + _OFF) * _STRIDE + (p.n + _OFF)


def _decode(code: int) -> EisensteinPoint:
    m, n = divmod(code, _STRIDE)
    return EisensteinPoint(m - _OFF, n - _OFF)


def _allowed_cells(n_max: int) -> frozenset:
    # cells >= origin in (n, m) order, within reach of an n_max-cell animal
    cells = set()
    for m in range(-n_max - 1, n_max + 2):
        for n in range(-n_max - 1, n_max + 2):
            p = EisensteinPoint(m, n)
            if p.hexdist() <= n_max and (n > 0 or (n == 0 and m >= 0)):
                cells.add(_encode(p))
    return frozenset(cells)


@lru_cache(maxsize=4)
def _exhaustive_profile(n_max: int):
    """(max_e, witness_codes) per size 1..n_max over all connected lattice sets."""
    root = _encode(EisensteinPoint(0, 0))
    allowed = _allowed_cells(n_max)
    best = [-1] * (n_max + 1)
    witness = [None] * (n_max + 1)
    best[1] = 0
    witness[1] = (root,)
    animal = {root}
    offs = _NEIGH_OFFS
    seen = {root}
    initial = []
    for d in offs:
        q = root + d
        if q in allowed:
            seen.add(q)
            initial.append(q)

    def extend(untried, ecount, size):
        while untried:
            c = untried.pop()
            gained = 0
            for d in offs:
                if c + d in animal:
                    gained += 1
            animal.add(c)
            e2 = ecount + gained
            s2 = size + 1
            if e2 > best[s2]:
                best[s2] = e2
                witness[s2] = tuple(animal)
            if s2 < n_max:
                new_untried = untried.copy()
                added = []
                for d in offs:
                    q = c + d
                    if q not in seen and q in allowed:
                        seen.add(q)
                        new_untried.append(q)
                        added.append(q)
                extend(new_untried, e2, s2)
                for q in added:
                    seen.discard(q)
            animal.discard(c)

    if n_max >= 2:
        extend(initial, 0, 1)
    return tuple((best[s], witness[s]) for s in range(n_max + 1))


def max_edges_lattice(n: int):
    """Exact maximum unit-edge count over connected n-point lattice subsets,
    with a witness set in canonical form."""
    if not 1 <= n <= MAX_ORACLE_N:
        raise BudgetError(f"exhaustive search limited to 1 <= n <= {MAX_ORACLE_N} (got {n})")
    profile = _exhaustive_profile(n)
    max_e, codes = profile[n]
    return max_e, canonicalize(_decode(c) for c in codes)


def max_edges_profile(n_max: int):
    """List of (n, max_e, witness) for n = 1..n_max; one search pass."""
    if not 1 <= n_max <= MAX_ORACLE_N:
        raise BudgetError(f"exhaustive search limited to 1 <= n <= {MAX_ORACLE_N} (got {n_max})")
    profile = _exhaustive_profile(n_max)
    return [(s, profile[s][0], canonicalize(_decode(c) for c in profile[s][1]))
            for s in range(1, n_max + 1)]


# ---------------------------------------------------------------------------
# exhaustive rearrangement search


def max_area_rearrangement(p) -> float:
    """Maximum area over all orderings of the directed edge vectors that close
    into a strictly simple polygon.  Cyclic rotations give the same polygon,
    so the first edge is fixed; the chain is pruned depth-first as soon as a
    partial self-intersection appears."""
    vecs = p.edge_vectors()
    m = len(vecs)
    if m > MAX_ORACLE_EDGES:
        raise BudgetError(f"rearrangement search limited to {MAX_ORACLE_EDGES} edges (got {m})")
    rest = sorted(vecs[1:])
    origin = (0.0, 0.0)
    pts = [origin, vecs[0]]
    best = [-math.inf]

    def turn_ok(shared, a, b):
        # adjacent segments meeting at `shared` must not overlap (anti-parallel)
        return not (abs(cross(shared, a, b)) <= 1e-12 and dot(shared, a, b) > 0)

    def clear_of(a, b, indices):
        return all(segment_distance(pts[i], pts[i + 1], a, b) > 1e-12 for i in indices)

    def rec(remaining):
        k = len(pts) - 1  # segments placed so far: S_0 .. S_{k-1}
        if len(remaining) == 1:
            # closing edge runs from pts[-1] back to the exact origin
            a = pts[-1]
            if (turn_ok(a, pts[-2], origin) and turn_ok(origin, a, pts[1])
                    and clear_of(a, origin, range(1, k - 1))):
                best[0] = max(best[0], abs(shoelace2(pts)) / 2.0)
            return
        prev = None
        for i, v in enumerate(remaining):
            if v == prev:
                continue
            prev = v
            a = pts[-1]
            b = (a[0] + v[0], a[1] + v[1])
            if not turn_ok(a, pts[-2], b):
                continue
            if not clear_of(a, b, range(k - 1)):
                continue
            pts.append(b)
            rec(remaining[:i] + remaining[i + 1:])
            pts.pop()

    rec(rest)
    if best[0] == -math.inf:
        raise ValueError("no simple rearrangement found (degenerate edge set)")
    return best[0]


# ---------------------------------------------------------------------------
# circle-intersection fuzz


_CLOSE_DIFFS = tuple(d for d in (
    list(UNIT_RING)
    + [EisensteinPoint(1, 1), EisensteinPoint(-1, 2), EisensteinPoint(-2, 1),
       EisensteinPoint(-1, -1), EisensteinPoint(1, -2), EisensteinPoint(2, -1)]
))


def unit_pair_fuzz(trials: int, seed: int = 0) -> dict:
    """Random lattice pairs (a, b) at distance < 2: the two floating-point
    intersections of the unit circles around a and b must match the exact
    lattice points common to both unit neighborhoods, within 1e-9."""
    rng = random.Random(seed)
    failures = []
    for t in range(trials):
        a = EisensteinPoint(rng.randint(-30, 30), rng.randint(-30, 30))
        b = a + _CLOSE_DIFFS[rng.randrange(len(_CLOSE_DIFFS))]
        ax, ay = a.cartesian()
        bx, by = b.cartesian()
        dx, dy = bx - ax, by - ay
        d = math.hypot(dx, dy)
        h = math.sqrt(max(1.0 - d * d / 4.0, 0.0))
        mx, my = (ax + bx) / 2.0, (ay + by) / 2.0
        ux, uy = dx / d, dy / d
        analytic = [(mx - h * uy, my + h * ux), (mx + h * uy, my - h * ux)]
        exact = [c.cartesian() for c in complete_unit_pair(a, b)]
        for q in analytic:
            err = min(math.dist(q, e) for e in exact) if exact else math.inf
            if err > 1e-9:
                failures.append({"a": (a.m, a.n), "b": (b.m, b.n),
                                 "point": q, "error": err})
    return {"ok": not failures, "trials": trials, "failures": failures}
