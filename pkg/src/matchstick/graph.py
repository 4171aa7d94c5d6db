"""Matchstick-graph representation, geometric validation, and face structure.

A matchstick graph is a plane graph whose edges are straight unit-length
segments meeting only at shared endpoints.  Vertices carry either exact
lattice coordinates (an ``EisensteinPoint`` within a ``LatticeFrame``) or
free cartesian floats.  Graphs whose vertices all live on one frame are
validated with exact integer predicates; everything else falls back to
tolerance-based float predicates.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import geometry as geo
from .lattice import UNIT_RING, EisensteinPoint, LatticeFrame

DEFAULT_TOL = 1e-9

# grid pruning: edges up to _SHORT_EDGE long go in a _CELL-sized midpoint grid
# (two such edges can only touch with midpoints within _SHORT_EDGE < _CELL);
# longer edges are rare in valid inputs and are checked brute-force
_CELL = 1.1
_SHORT_EDGE = 1.05


class ConsistencyError(Exception):
    """A theorem-level invariant failed; indicates a bug or corrupted input."""


@dataclass(frozen=True)
class LatticeCoord:
    frame: int
    point: EisensteinPoint


@dataclass(frozen=True)
class FreeCoord:
    x: float
    y: float


@dataclass(frozen=True)
class Violation:
    kind: str  # NonUnitEdge | Crossing | VertexOnEdge | DuplicateVertexPosition | PennyDistance
    ids: tuple
    value: float | None = None


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...]
    mode: str  # "lattice" or "free"

    def to_json(self) -> str:
        return json.dumps({
            "ok": self.ok,
            "mode": self.mode,
            "violations": [
                {"kind": v.kind, "ids": list(v.ids), "value": v.value}
                for v in self.violations
            ],
        })


@dataclass(frozen=True)
class FaceStructure:
    faces: tuple[tuple[int, ...], ...]  # directed vertex cycles, inner ones counterclockwise
    outer_face_index: int
    face_of_dart: dict

    @property
    def inner_faces(self):
        return tuple(f for i, f in enumerate(self.faces) if i != self.outer_face_index)

    @property
    def outer_face(self):
        return self.faces[self.outer_face_index]


@dataclass(frozen=True)
class Block:
    vertices: frozenset
    edges: frozenset


@dataclass(frozen=True)
class ConnectivityInfo:
    connected: bool
    two_connected: bool
    min_degree: int
    blocks: tuple[Block, ...]
    cut_vertices: frozenset


def _norm_edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


class MatchstickGraph:
    """Immutable plane graph with unit-segment edges.

    ``vertices`` is an ordered list of (id, coord) with coord either a
    LatticeCoord or a FreeCoord; ``edges`` is a set of unordered id pairs.
    Construction checks structural sanity only; call :meth:`validate` for
    the geometric checks.
    """

    def __init__(self, vertices, edges, frames=()):
        vertices = tuple(vertices)
        if not vertices:
            raise ValueError("graph needs at least one vertex")
        ids = [vid for vid, _ in vertices]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate vertex ids")
        idset = set(ids)
        norm_edges = set()
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at vertex {a}")
            if a not in idset or b not in idset:
                raise ValueError(f"edge ({a},{b}) references unknown vertex")
            norm_edges.add(_norm_edge(a, b))
        self.vertices = vertices
        self.edges = frozenset(norm_edges)
        self.frames = tuple(frames)
        for vid, coord in vertices:
            if isinstance(coord, LatticeCoord) and not (0 <= coord.frame < len(self.frames)):
                raise ValueError(f"vertex {vid} references unknown frame {coord.frame}")
        self._coord = dict(vertices)
        self._positions = None
        self._adj = None
        self._validated_ok = False
        self._report_cache = {}

    # -- basic accessors ----------------------------------------------------

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def e(self) -> int:
        return len(self.edges)

    def coord(self, vid: int):
        return self._coord[vid]

    def ids(self):
        return [vid for vid, _ in self.vertices]

    @property
    def lattice_mode(self) -> bool:
        """True when every vertex is a lattice coordinate on a single frame."""
        frames_used = set()
        for _, c in self.vertices:
            if isinstance(c, FreeCoord):
                return False
            frames_used.add(c.frame)
        return len(frames_used) == 1

    def position(self, vid: int) -> tuple[float, float]:
        return self.positions()[vid]

    def positions(self) -> dict:
        if self._positions is None:
            pos = {}
            for vid, c in self.vertices:
                if isinstance(c, FreeCoord):
                    pos[vid] = (c.x, c.y)
                else:
                    pos[vid] = self.frames[c.frame].to_cartesian(c.point)
            self._positions = pos
        return self._positions

    def scaled_positions(self) -> dict:
        """Doubled integer coordinates (2m+n, n); only meaningful in lattice mode."""
        out = {}
        for vid, c in self.vertices:
            out[vid] = c.point.scaled()
        return out

    def adjacency(self) -> dict:
        if self._adj is None:
            adj = {vid: [] for vid, _ in self.vertices}
            for a, b in sorted(self.edges):
                adj[a].append(b)
                adj[b].append(a)
            self._adj = adj
        return self._adj

    def degree(self, vid: int) -> int:
        return len(self.adjacency()[vid])

    @property
    def validated(self) -> bool:
        return self._validated_ok

    # -- validation ----------------------------------------------------------

    def validate(self, tol: float = DEFAULT_TOL, penny_mode: bool = False) -> ValidationReport:
        """Check unit lengths, non-crossing, vertex/edge separation, and (optionally)
        the penny condition that all pairwise vertex distances are at least 1.

        Violations are data, not errors; the report lists all of them.
        Reports are cached per (tol, penny_mode): the graph is immutable.
        """
        exact = self.lattice_mode
        key = (tol, penny_mode)
        cached = self._report_cache.get(key)
        if cached is not None:
            return cached
        violations = (_validate_exact(self, penny_mode) if exact
                      else _validate_float(self, tol, penny_mode))
        violations.sort(key=lambda v: (v.kind, v.ids))
        report = ValidationReport(ok=not violations, violations=tuple(violations),
                                  mode="lattice" if exact else "free")
        if report.ok:
            self._validated_ok = True
        self._report_cache[key] = report
        return report

    def require_validated(self):
        if not self._validated_ok:
            raise ValueError("graph has not passed validate()")

    # -- serialization ---------------------------------------------------------

    def to_json(self) -> str:
        """Canonical JSON: frames by id, vertices sorted by id, edges sorted;
        floats with 17 significant digits (bit-exact round-trip)."""
        parts = ['{"frames":[']
        parts.append(",".join(
            '{"id":%d,"origin":[%s,%s],"angle":%s}'
            % (i, _f(fr.origin[0]), _f(fr.origin[1]), _f(fr.angle))
            for i, fr in enumerate(self.frames)))
        parts.append('],"vertices":[')
        vparts = []
        for vid, c in sorted(self.vertices):
            if isinstance(c, LatticeCoord):
                vparts.append('{"id":%d,"lattice":{"frame":%d,"m":%d,"n":%d}}'
                              % (vid, c.frame, c.point.m, c.point.n))
            else:
                vparts.append('{"id":%d,"free":[%s,%s]}' % (vid, _f(c.x), _f(c.y)))
        parts.append(",".join(vparts))
        parts.append('],"edges":[')
        parts.append(",".join("[%d,%d]" % ab for ab in sorted(self.edges)))
        parts.append("]}")
        return "".join(parts)

    @classmethod
    def from_json(cls, text: str) -> "MatchstickGraph":
        data = json.loads(text)
        frames = [None] * len(data.get("frames", []))
        for fr in data.get("frames", []):
            frames[fr["id"]] = LatticeFrame(origin=(float(fr["origin"][0]), float(fr["origin"][1])),
                                            angle=float(fr["angle"]))
        vertices = []
        for v in data["vertices"]:
            if "lattice" in v:
                lat = v["lattice"]
                vertices.append((v["id"], LatticeCoord(lat["frame"],
                                                       EisensteinPoint(lat["m"], lat["n"]))))
            else:
                vertices.append((v["id"], FreeCoord(float(v["free"][0]), float(v["free"][1]))))
        edges = [tuple(e) for e in data["edges"]]
        return cls(vertices, edges, frames)


def _f(x: float) -> str:
    x = float(x)
    if x == 0.0:
        x = 0.0  # canonicalize -0.0
    return format(x, ".17g")


# ---------------------------------------------------------------------------
# construction helpers


def lattice_graph(points, edges=None, frame: LatticeFrame = LatticeFrame()) -> MatchstickGraph:
    """Graph on the given EisensteinPoints; edges default to all unit pairs."""
    points = list(points)
    if len(set(points)) != len(points):
        raise ValueError("duplicate lattice points")
    index = {p: i for i, p in enumerate(points)}
    if edges is None:
        edges = []
        for p, i in index.items():
            for q in (p + d for d in _HALF_RING):
                j = index.get(q)
                if j is not None:
                    edges.append((i, j))
    vertices = [(i, LatticeCoord(0, p)) for i, p in enumerate(points)]
    return MatchstickGraph(vertices, edges, frames=(frame,))


def free_graph(coords, edges) -> MatchstickGraph:
    vertices = [(i, FreeCoord(float(x), float(y))) for i, (x, y) in enumerate(coords)]
    return MatchstickGraph(vertices, edges)


_HALF_RING = UNIT_RING[:3]  # one per unordered direction pair


# ---------------------------------------------------------------------------
# validation internals


def _grid_of(points, cell=_CELL):
    grid = {}
    for key, (x, y) in points:
        c = (math.floor(x / cell), math.floor(y / cell))
        grid.setdefault(c, []).append(key)
    return grid


def _near_cells(grid, x, y, cell=_CELL):
    cx, cy = math.floor(x / cell), math.floor(y / cell)
    for dx in (-1, 0, 1):
        for dy in (-1, 0, 1):
            yield from grid.get((cx + dx, cy + dy), ())


def _vertex_pairs(g: MatchstickGraph):
    """Candidate vertex pairs at distance < CELL, via grid pruning."""
    pos = g.positions()
    grid = _grid_of(pos.items())
    seen = set()
    for vid, (x, y) in pos.items():
        for other in _near_cells(grid, x, y):
            if other == vid:
                continue
            pair = _norm_edge(vid, other)
            if pair not in seen:
                seen.add(pair)
                yield pair


def _edge_pairs_and_vertex_hits(g: MatchstickGraph):
    """Candidate (edge, edge) and (vertex, edge) interactions via grid pruning."""
    pos = g.positions()
    edges = sorted(g.edges)
    mids = []
    long_edges = []
    for idx, (a, b) in enumerate(edges):
        (ax, ay), (bx, by) = pos[a], pos[b]
        if math.hypot(bx - ax, by - ay) <= _SHORT_EDGE:
            mids.append((idx, ((ax + bx) / 2, (ay + by) / 2)))
        else:
            long_edges.append(idx)
    egrid = _grid_of(mids)
    epairs = set()
    for idx, (mx, my) in mids:
        for other in _near_cells(egrid, mx, my):
            if other != idx:
                epairs.add((min(idx, other), max(idx, other)))
    for li in long_edges:
        for idx in range(len(edges)):
            if idx != li:
                epairs.add((min(li, idx), max(li, idx)))
    vhits = set()
    vgrid = _grid_of(pos.items())
    for idx, (mx, my) in mids:
        for vid in _near_cells(vgrid, mx, my):
            vhits.add((vid, idx))
    for li in long_edges:
        for vid in pos:
            vhits.add((vid, li))
    return edges, sorted(epairs), sorted(vhits)


def _validate_exact(g: MatchstickGraph, penny_mode: bool):
    sp = g.scaled_positions()
    out = []
    for a, b in sorted(g.edges):
        du = sp[b][0] - sp[a][0]
        dv = sp[b][1] - sp[a][1]
        norm = (du * du + 3 * dv * dv) // 4
        if norm != 1:
            out.append(Violation("NonUnitEdge", (a, b), math.sqrt(norm)))
    for a, b in _vertex_pairs(g):
        if sp[a] == sp[b]:
            out.append(Violation("DuplicateVertexPosition", (a, b), 0.0))
            if penny_mode:
                out.append(Violation("PennyDistance", (a, b), 0.0))
    edges, epairs, vhits = _edge_pairs_and_vertex_hits(g)
    for vid, ei in vhits:
        a, b = edges[ei]
        if vid in (a, b):
            continue
        if geo.strictly_inside_segment_int(sp[a], sp[b], sp[vid]):
            out.append(Violation("VertexOnEdge", (vid, a, b), 0.0))
    for i, j in epairs:
        a1, b1 = edges[i]
        a2, b2 = edges[j]
        shared = {a1, b1} & {a2, b2}
        if len(shared) == 1:
            s = shared.pop()
            p = b1 if a1 == s else a1
            q = b2 if a2 == s else a2
            if geo.cross(sp[s], sp[p], sp[q]) == 0 and geo.dot(sp[s], sp[p], sp[q]) > 0:
                out.append(Violation("Crossing", (a1, b1, a2, b2), 0.0))
        elif not shared:
            if geo.segments_intersect_int(sp[a1], sp[b1], sp[a2], sp[b2]):
                out.append(Violation("Crossing", (a1, b1, a2, b2), 0.0))
    return out


def _validate_float(g: MatchstickGraph, tol: float, penny_mode: bool):
    pos = g.positions()
    out = []
    for a, b in sorted(g.edges):
        (ax, ay), (bx, by) = pos[a], pos[b]
        length = math.hypot(bx - ax, by - ay)
        if abs(length - 1.0) > tol:
            out.append(Violation("NonUnitEdge", (a, b), length))
    for a, b in _vertex_pairs(g):
        d = math.dist(pos[a], pos[b])
        if d <= tol:
            out.append(Violation("DuplicateVertexPosition", (a, b), d))
        if penny_mode and d < 1.0 - tol:
            out.append(Violation("PennyDistance", (a, b), d))
    edges, epairs, vhits = _edge_pairs_and_vertex_hits(g)
    for vid, ei in vhits:
        a, b = edges[ei]
        if vid in (a, b):
            continue
        d = geo.point_segment_distance(pos[vid], pos[a], pos[b])
        if d <= tol and math.dist(pos[vid], pos[a]) > tol and math.dist(pos[vid], pos[b]) > tol:
            out.append(Violation("VertexOnEdge", (vid, a, b), d))
    for i, j in epairs:
        a1, b1 = edges[i]
        a2, b2 = edges[j]
        shared = {a1, b1} & {a2, b2}
        if len(shared) == 1:
            s = shared.pop()
            p = b1 if a1 == s else a1
            q = b2 if a2 == s else a2
            if geo.dot(pos[s], pos[p], pos[q]) > 0:
                d = min(geo.point_segment_distance(pos[p], pos[s], pos[q]),
                        geo.point_segment_distance(pos[q], pos[s], pos[p]))
                if d <= tol:
                    out.append(Violation("Crossing", (a1, b1, a2, b2), d))
        elif not shared:
            d = geo.segment_distance(pos[a1], pos[b1], pos[a2], pos[b2])
            if d <= tol:
                out.append(Violation("Crossing", (a1, b1, a2, b2), d))
    return out


# ---------------------------------------------------------------------------
# rotation system and faces


def rotation_system(g: MatchstickGraph) -> dict:
    """Neighbors of each vertex sorted counterclockwise by edge direction,
    starting from the smallest angle in [0, 2*pi).  Requires a validated graph
    (equal angles at a vertex would mean overlapping edges)."""
    g.require_validated()
    pos = g.positions()
    rot = {}
    for vid, nbrs in g.adjacency().items():
        x, y = pos[vid]

        def angle(u):
            a = math.atan2(pos[u][1] - y, pos[u][0] - x)
            return a if a >= 0 else a + 2 * math.pi

        rot[vid] = tuple(sorted(nbrs, key=angle))
    return rot


def _is_connected(g: MatchstickGraph) -> bool:
    ids = g.ids()
    adj = g.adjacency()
    seen = {ids[0]}
    stack = [ids[0]]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def faces(g: MatchstickGraph) -> FaceStructure:
    """Face cycles by the next-dart rule: at the head of dart (u, v) continue to
    the neighbor immediately clockwise of u around v.  Inner faces come out
    counterclockwise; the outer face is the unique clockwise one (negative
    shoelace sum over its closed walk)."""
    g.require_validated()
    if not _is_connected(g):
        raise ValueError("faces() requires a connected graph")
    if g.e == 0:
        return FaceStructure(faces=((),), outer_face_index=0, face_of_dart={})
    rot = rotation_system(g)
    idx_of = {v: {u: i for i, u in enumerate(nbrs)} for v, nbrs in rot.items()}
    pos = g.positions()
    face_of_dart = {}
    cycles = []
    for u0 in sorted(rot):
        for v0 in rot[u0]:
            if (u0, v0) in face_of_dart:
                continue
            cycle = []
            u, v = u0, v0
            fidx = len(cycles)
            while (u, v) not in face_of_dart:
                face_of_dart[(u, v)] = fidx
                cycle.append(u)
                nbrs = rot[v]
                w = nbrs[(idx_of[v][u] - 1) % len(nbrs)]
                u, v = v, w
            cycles.append(_canonical_rotation(cycle))
    outer = [i for i, c in enumerate(cycles) if geo.shoelace2([pos[v] for v in c]) < 0]
    if len(cycles) == 1:
        outer_idx = 0
    elif len(outer) == 1:
        outer_idx = outer[0]
    else:
        raise ConsistencyError(f"expected exactly one clockwise face, found {len(outer)}")
    total = sum(len(c) for c in cycles)
    if total != 2 * g.e:
        raise ConsistencyError(f"dart count {total} != 2e = {2 * g.e}")
    return FaceStructure(faces=tuple(cycles), outer_face_index=outer_idx,
                         face_of_dart=face_of_dart)


def _canonical_rotation(cycle):
    k = len(cycle)
    best = min(range(k), key=lambda i: tuple(cycle[(i + j) % k] for j in range(k)))
    return tuple(cycle[(best + j) % k] for j in range(k))


def boundary(g: MatchstickGraph) -> tuple[list, int]:
    """Outer-face cycle and its length; defined for 2-connected graphs only."""
    info = connectivity(g)
    if not info.two_connected:
        raise ValueError("boundary requires a 2-connected graph")
    fs = faces(g)
    cycle = list(fs.outer_face)
    return cycle, len(cycle)


# ---------------------------------------------------------------------------
# connectivity / blocks


def block_decomposition(ids, adj):
    """Blocks and cut vertices of the graph given as an adjacency dict,
    via iterative Hopcroft-Tarjan.  Isolated vertices become vertex-only blocks."""
    disc = {}
    low = {}
    edge_stack = []
    raw_blocks = []
    cut = set()
    timer = 0
    for root in sorted(ids):
        if root in disc:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack = [(root, None, iter(sorted(adj[root])))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(sorted(adj[w]))))
                    advanced = True
                    break
                elif disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if low[v] >= disc[p]:
                        comp = []
                        while edge_stack[-1] != (p, v):
                            comp.append(edge_stack.pop())
                        comp.append(edge_stack.pop())
                        raw_blocks.append(comp)
                        if p == root:
                            root_children += 1
                        else:
                            cut.add(p)
        if root_children > 1:
            cut.add(root)
        if not adj[root]:
            raw_blocks.append([(root, root)])  # isolated-vertex marker, unpacked below
    blocks = []
    for comp in raw_blocks:
        if len(comp) == 1 and comp[0][0] == comp[0][1]:
            blocks.append(Block(vertices=frozenset({comp[0][0]}), edges=frozenset()))
        else:
            vs = frozenset(v for e in comp for v in e)
            es = frozenset(_norm_edge(*e) for e in comp)
            blocks.append(Block(vertices=vs, edges=es))
    blocks.sort(key=lambda b: min(b.vertices))
    return tuple(blocks), frozenset(cut)


def connectivity(g: MatchstickGraph) -> ConnectivityInfo:
    """Standard block-cut decomposition; blocks ordered by smallest contained id."""
    adj = g.adjacency()
    ids = g.ids()
    blocks, cut = block_decomposition(ids, adj)
    connected = _is_connected(g)
    two_connected = connected and g.n >= 3 and not cut
    return ConnectivityInfo(connected=connected,
                            two_connected=two_connected,
                            min_degree=min(len(adj[v]) for v in ids),
                            blocks=blocks,
                            cut_vertices=cut)
