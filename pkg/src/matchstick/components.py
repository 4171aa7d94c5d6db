"""Decomposition of a matchstick graph into lattice components.

A lattice component is a maximal 2-connected subgraph on at least 3 vertices
whose vertices all lie on one triangular lattice.  Components are found by
seeding a candidate lattice frame from wedges (pairs of adjacent edges whose
angle is a nonzero multiple of 60 degrees; triangular faces are a special
case) and growing the connected set of vertices consistent with that frame.
Any point at distance 1 from two points of a lattice is itself on the
lattice, so consistency can be checked pointwise against the seed frame.

No two components share an edge: a shared edge would force a common lattice
and the union would be a larger 2-connected subgraph on it.
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass

from . import geometry as geo
from .census import face_census
from .graph import (ConsistencyError, LatticeCoord, MatchstickGraph, _norm_edge,
                    block_decomposition, boundary, connectivity, lattice_graph)
from .lattice import UNIT_RING, EisensteinPoint, LatticeFrame, phi

ANGLE_TOL = 1e-9
POS_TOL = 1e-9


@dataclass(frozen=True)
class LatticeComponent:
    vertices: frozenset
    edges: frozenset
    frame: LatticeFrame
    coords: dict  # vertex id -> EisensteinPoint
    boundary_cycle: tuple
    n_i: int
    e_i: int
    b_i: int

    @property
    def boundary_edges(self) -> frozenset:
        c = self.boundary_cycle
        return frozenset(_norm_edge(c[i], c[(i + 1) % len(c)]) for i in range(len(c)))


@dataclass(frozen=True)
class DecompositionReport:
    components: tuple  # sorted so n_1 >= n_2 >= ...
    sum_n_i: int
    # census-dependent fields are None when the input is not 2-connected
    lower: int | None  # n - 2F
    upper: int | None  # n + 4F
    b_star: int | None  # boundary edges of g not on the boundary of G_1; None when k = 0

    @property
    def k(self) -> int:
        return len(self.components)

    def to_json(self) -> str:
        return json.dumps({
            "k": self.k,
            "sum_n_i": self.sum_n_i,
            "coverage": None if self.lower is None else [self.lower, self.upper],
            "b_star": self.b_star,
            "components": [
                {
                    "vertices": sorted(c.vertices),
                    "frame": {"origin": list(c.frame.origin), "angle": c.frame.angle},
                    "n_i": c.n_i, "e_i": c.e_i, "b_i": c.b_i,
                }
                for c in self.components
            ],
        })


def decompose(g: MatchstickGraph, tol: float = POS_TOL) -> DecompositionReport:
    """Find all lattice components of a validated graph.

    Output order is deterministic: decreasing n_i, ties by smallest vertex id.
    The coverage bounds and b_star require the face census and outer boundary,
    so they are None for graphs that are not 2-connected.
    """
    g.require_validated()
    two_connected = connectivity(g).two_connected
    census = face_census(g) if two_connected else None

    if g.lattice_mode:
        # every vertex is on the one input lattice, so the components are just
        # the 2-connected blocks on >= 3 vertices, with the input coordinates
        frame = g.frames[next(iter(g.coord(v).frame for v in g.ids()))]
        coords = {vid: g.coord(vid).point for vid in g.ids()}
        grown_sets = [(set(g.ids()), set(g.edges), frame, coords)]
    else:
        grown_sets = _grow_all_seeds(g, tol)

    comps = []
    seen_edge_sets = set()
    for vset, eset, frame, coords in grown_sets:
        adj = {v: [] for v in vset}
        for a, b in eset:
            adj[a].append(b)
            adj[b].append(a)
        blocks, _ = block_decomposition(sorted(vset), adj)
        for blk in blocks:
            if len(blk.vertices) < 3:
                continue
            if blk.edges in seen_edge_sets:
                continue
            seen_edge_sets.add(blk.edges)
            comps.append(_make_component(blk.vertices, blk.edges, frame, coords))
    # drop components strictly contained in another
    comps = [c for c in comps
             if not any(c is not d and c.edges < d.edges for d in comps)]
    comps.sort(key=lambda c: (-c.n_i, min(c.vertices)))

    b_star_val = b_star_count(g, comps[0]) if comps and two_connected else None
    return DecompositionReport(
        components=tuple(comps),
        sum_n_i=sum(c.n_i for c in comps),
        lower=None if census is None else g.n - 2 * census.F,
        upper=None if census is None else g.n + 4 * census.F,
        b_star=b_star_val,
    )


def _grow_all_seeds(g: MatchstickGraph, tol: float):
    """Grow the lattice-consistent region of every 60-degree wedge seed.

    The grown region is the connected component (through edges of g) of the
    set of vertices whose position lies on the seed's lattice, so seeds whose
    edges already lie in a grown region would reproduce it and are skipped.
    """
    pos = g.positions()
    adj = g.adjacency()
    grown = []
    for x in sorted(adj):
        nbrs = sorted(adj[x])
        if len(nbrs) < 2:
            continue
        for i in range(len(nbrs)):
            for j in range(i + 1, len(nbrs)):
                y, w = nbrs[i], nbrs[j]
                ang_y = math.atan2(pos[y][1] - pos[x][1], pos[y][0] - pos[x][0])
                ang_w = math.atan2(pos[w][1] - pos[x][1], pos[w][0] - pos[x][0])
                delta = (ang_w - ang_y) % (2 * math.pi)
                k = round(delta / (math.pi / 3))
                if not (1 <= k <= 5) or abs(delta - k * math.pi / 3) > ANGLE_TOL:
                    continue
                e1, e2 = _norm_edge(x, y), _norm_edge(x, w)
                if any(e1 in eset and e2 in eset for _, eset, _, _ in grown):
                    continue
                frame = LatticeFrame(origin=pos[x], angle=ang_y)
                seed = {x: EisensteinPoint(0, 0), y: EisensteinPoint(1, 0),
                        w: UNIT_RING[k]}
                coords = _grow(pos, adj, frame, seed, tol)
                vset = set(coords)
                eset = {e for e in g.edges if e[0] in vset and e[1] in vset}
                grown.append((vset, eset, frame, coords))
    return grown


def _grow(pos, adj, frame, seed, tol):
    coords = dict(seed)
    used_points = set(seed.values())
    queue = deque(sorted(seed))
    while queue:
        v = queue.popleft()
        for u in sorted(adj[v]):
            if u in coords:
                continue
            p = frame.nearest_point(pos[u])
            if p in used_points:
                continue
            if math.dist(frame.to_cartesian(p), pos[u]) <= tol:
                coords[u] = p
                used_points.add(p)
                queue.append(u)
    return coords


def component_subgraph(comp: LatticeComponent) -> MatchstickGraph:
    """The component as a standalone lattice-mode graph (original vertex ids)."""
    vertices = [(vid, LatticeCoord(0, comp.coords[vid])) for vid in sorted(comp.vertices)]
    sub = MatchstickGraph(vertices, comp.edges, frames=(comp.frame,))
    report = sub.validate()
    if not report.ok:
        raise ConsistencyError(
            f"lattice component failed exact validation: {report.violations[0]}")
    return sub


def _make_component(vset, eset, frame, coords) -> LatticeComponent:
    comp_coords = {v: coords[v] for v in vset}
    tmp = LatticeComponent(vertices=frozenset(vset), edges=frozenset(eset),
                           frame=frame, coords=comp_coords, boundary_cycle=(),
                           n_i=len(vset), e_i=len(eset), b_i=0)
    cycle, b = boundary(component_subgraph(tmp))
    return LatticeComponent(vertices=tmp.vertices, edges=tmp.edges, frame=frame,
                            coords=comp_coords, boundary_cycle=tuple(cycle),
                            n_i=tmp.n_i, e_i=tmp.e_i, b_i=b)


def component_boundary_check(comp: LatticeComponent):
    """b_i >= phi(n_i) holds unconditionally for 2-connected lattice subgraphs
    (fill the boundary polygon with lattice points and apply the edge bound)."""
    target = phi(comp.n_i)
    holds = comp.b_i >= target - 1e-9
    if not holds:
        raise ConsistencyError(
            f"component boundary bound failed: b_i={comp.b_i} < phi({comp.n_i})={target}")
    return comp.b_i, target, holds


def fill_component(comp: LatticeComponent) -> MatchstickGraph:
    """All lattice points inside or on the component's boundary polygon, with
    all unit edges; keeps the outer boundary and never loses vertices."""
    poly = [comp.coords[v].scaled() for v in comp.boundary_cycle]
    ms = [comp.coords[v].m for v in comp.boundary_cycle]
    ns = [comp.coords[v].n for v in comp.boundary_cycle]
    points = []
    for m in range(min(ms), max(ms) + 1):
        for n in range(min(ns), max(ns) + 1):
            p = EisensteinPoint(m, n)
            if geo.point_in_polygon_int(p.scaled(), poly):
                points.append(p)
    return lattice_graph(points, frame=comp.frame)


def b_star_count(g: MatchstickGraph, g1: LatticeComponent) -> int:
    """Boundary edges of g that are not on the boundary of the component g1."""
    cycle, _ = boundary(g)
    outer_edges = {_norm_edge(cycle[i], cycle[(i + 1) % len(cycle)])
                   for i in range(len(cycle))}
    return len(outer_edges - g1.boundary_edges)


def b_star(g: MatchstickGraph, report: DecompositionReport) -> int:
    if not report.components:
        raise ValueError("b_star undefined: decomposition has no components")
    return b_star_count(g, report.components[0])


def coverage_bounds(g: MatchstickGraph, report: DecompositionReport) -> dict:
    """Claim-style coverage record n-2F <= sum n_i <= n+4F.

    Diagnostic only: the two-sided bound is proved under the contradiction
    hypothesis, so `within` may legitimately be False for a real graph.
    """
    census = face_census(g)
    lower = g.n - 2 * census.F
    upper = g.n + 4 * census.F
    s = report.sum_n_i
    return {"sum_n_i": s, "lower": lower, "upper": upper,
            "within": lower <= s <= upper}
