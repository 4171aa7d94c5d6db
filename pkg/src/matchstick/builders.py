"""Constructors for lattice graphs: filled hexagon patches, spiral prefixes
that meet the edge bound floor(3n - sqrt(12n-3)) with equality for every n,
and seeded random lattice subgraphs for fuzzing.

The spiral lists the origin, then ring 1 counterclockwise from (1, 0), then
ring k = 2, 3, ... counterclockwise starting at (k-1, 1).  Starting later
rings one step past the corner (k, 0) matters: the corner itself has only
one earlier neighbor, while (k-1, 1) touches two, which is exactly what the
edge-count increments (always 2 or 3 per vertex) require.  Correctness is
not assumed: build_extremal asserts the edge count against the bound for
every n and falls back to an explicit search should the spiral ever miss.
"""

from __future__ import annotations

import logging
import random
from itertools import count, islice

from .graph import ConsistencyError, MatchstickGraph, connectivity, lattice_graph
from .lattice import ORIGIN, UNIT_RING, EisensteinPoint, harborth_bound

log = logging.getLogger(__name__)


def ring_points(k: int) -> list[EisensteinPoint]:
    """The 6k lattice points at hex distance k, counterclockwise from (k, 0)."""
    if k == 0:
        return [ORIGIN]
    pts = []
    p = EisensteinPoint(k, 0)
    for side in range(6):
        step = UNIT_RING[(side + 2) % 6]  # interior angle turn of the hexagon
        for _ in range(k):
            pts.append(p)
            p = p + step
    return pts


def spiral_order():
    """Infinite generator of lattice points in spiral order (see module docstring)."""
    yield ORIGIN
    yield from ring_points(1)
    for k in count(2):
        ring = ring_points(k)
        yield from ring[1:]
        yield ring[0]


def spiral_points(n: int) -> list[EisensteinPoint]:
    if n < 1:
        raise ValueError("n must be >= 1")
    return list(islice(spiral_order(), n))


def build_hexagon_patch(k: int) -> MatchstickGraph:
    """All lattice points within hex distance k of the origin, with all unit edges.

    Closed forms: n = 3k^2 + 3k + 1, e = 9k^2 + 3k, boundary length 6k (k >= 1).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    pts = [ORIGIN]
    for r in range(1, k + 1):
        pts.extend(ring_points(r))
    return lattice_graph(pts)


def build_extremal(n: int) -> MatchstickGraph:
    """First n spiral points with all unit edges; meets the edge bound exactly.

    The bound is asserted per n.  If the spiral prefix ever missed it the
    builder would log loudly and fall back to an exhaustive augmentation
    search rather than silently return a non-extremal graph.
    """
    g = lattice_graph(spiral_points(n))
    bound = harborth_bound(n)
    if g.e != bound:
        log.error("spiral prefix for n=%d has %d edges, bound is %d; "
                  "falling back to augmentation search", n, g.e, bound)
        g = _augmentation_search(n, bound)
    report = g.validate()
    if not report.ok:
        raise ConsistencyError(f"extremal builder produced invalid graph for n={n}")
    return g


def _augmentation_search(n: int, bound: int) -> MatchstickGraph:
    """Exhaustive fallback: grow point sets depth-first, maximizing unit edges.

    Only reachable if the spiral construction failed, which would falsify the
    chosen construction (not the bound itself).
    """
    best = None

    def grow(points: list, edge_count: int):
        nonlocal best
        if best is not None:
            return
        if len(points) == n:
            if edge_count == bound:
                best = list(points)
            return
        seen = set(points)
        frontier = []
        fseen = set()
        for p in points:
            for d in UNIT_RING:
                q = p + d
                if q not in seen and q not in fseen:
                    fseen.add(q)
                    frontier.append(q)
        frontier.sort(key=lambda q: -sum((q + d) in seen for d in UNIT_RING))
        for q in frontier:
            gained = sum((q + d) in seen for d in UNIT_RING)
            # optimistic: every later vertex gains at most 3
            if edge_count + gained + 3 * (n - len(points) - 1) < bound:
                continue
            points.append(q)
            grow(points, edge_count + gained)
            points.pop()
            if best is not None:
                return

    grow([ORIGIN], 0)
    if best is None:
        raise ConsistencyError(f"no lattice point set with {bound} edges found for n={n}")
    return lattice_graph(best)


def random_lattice_subgraph(n: int, seed: int, require_2connected: bool = False,
                            max_retries: int = 200) -> MatchstickGraph:
    """Connected random lattice point set grown by seeded BFS with random
    frontier selection; includes all unit edges on the set.  With
    require_2connected, regrows until the unit-edge graph is 2-connected."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if require_2connected and n < 3:
        raise ValueError("2-connected graphs need n >= 3")
    rng = random.Random(seed)
    for _ in range(max_retries):
        points = _grow_random(rng, n)
        g = lattice_graph(points)
        if not require_2connected or connectivity(g).two_connected:
            report = g.validate()
            if not report.ok:
                raise ConsistencyError("random lattice subgraph failed validation")
            return g
    raise ValueError(f"could not grow a 2-connected subgraph with n={n} "
                     f"in {max_retries} attempts (seed={seed})")


def _grow_random(rng: random.Random, n: int) -> list[EisensteinPoint]:
    points = [ORIGIN]
    chosen = {ORIGIN}
    frontier = list(UNIT_RING)
    while len(points) < n:
        i = rng.randrange(len(frontier))
        frontier[i], frontier[-1] = frontier[-1], frontier[i]
        q = frontier.pop()
        if q in chosen:
            continue
        chosen.add(q)
        points.append(q)
        for d in UNIT_RING:
            nb = q + d
            if nb not in chosen:
                frontier.append(nb)
    return points
