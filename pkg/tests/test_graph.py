import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from matchstick.builders import build_hexagon_patch, random_lattice_subgraph
from matchstick.graph import (MatchstickGraph, boundary, connectivity, faces,
                              free_graph, lattice_graph, rotation_system)
from matchstick.lattice import EisensteinPoint, eisenstein_norm, harborth_bound

E = EisensteinPoint


def triangle():
    return lattice_graph([E(0, 0), E(1, 0), E(0, 1)])


def double_triangle():
    # two unit triangles sharing the edge (0,0)-(1,0); realizes the n=4 bound
    return lattice_graph([E(0, 0), E(1, 0), E(0, 1), E(1, -1)])


class TestValidate:
    def test_triangle_ok(self):
        rep = triangle().validate()
        assert rep.ok and rep.mode == "lattice" and not rep.violations

    def test_double_triangle_realizes_bound(self):
        g = double_triangle()
        assert g.validate().ok
        assert g.e == 5 == harborth_bound(4)

    def test_k4_crossing_and_nonunit(self):
        g = free_graph([(0, 0), (1, 0), (1, 1), (0, 1)],
                       [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
        rep = g.validate()
        kinds = sorted(v.kind for v in rep.violations)
        assert not rep.ok
        assert kinds == ["Crossing", "NonUnitEdge", "NonUnitEdge"]
        crossing = next(v for v in rep.violations if v.kind == "Crossing")
        assert set(crossing.ids) == {0, 1, 2, 3}

    def test_duplicate_vertex_position(self):
        g = free_graph([(0, 0), (1, 0), (0, 0)], [(0, 1)])
        rep = g.validate()
        assert any(v.kind == "DuplicateVertexPosition" and set(v.ids) == {0, 2}
                   for v in rep.violations)

    def test_vertex_on_edge(self):
        g = free_graph([(0, 0), (1, 0), (0.5, 0.0), (0.5, 1.0)], [(0, 1), (2, 3)])
        rep = g.validate()
        assert any(v.kind == "VertexOnEdge" and v.ids[0] == 2 for v in rep.violations)

    def test_vertex_on_edge_exact_lattice(self):
        # (1,0) sits in the interior of the length-2 segment (0,0)-(2,0)
        g = lattice_graph([E(0, 0), E(2, 0), E(1, 0)], edges=[(0, 1)])
        rep = g.validate()
        kinds = {v.kind for v in rep.violations}
        assert "VertexOnEdge" in kinds and "NonUnitEdge" in kinds

    def test_overlapping_edges_at_shared_endpoint(self):
        g = free_graph([(0, 0), (1, 0), (2, 0)], [(0, 1), (0, 2)])
        rep = g.validate()
        assert any(v.kind == "Crossing" for v in rep.violations)

    def test_penny_mode_free(self):
        g = free_graph([(0, 0), (0.9, 0)], [])
        rep = g.validate(penny_mode=True)
        assert any(v.kind == "PennyDistance" for v in rep.violations)
        assert g.validate(penny_mode=False).ok

    def test_penny_mode_lattice_ok(self):
        rep = build_hexagon_patch(1).validate(penny_mode=True)
        assert rep.ok

    def test_unit_edges_never_flagged_in_lattice_mode(self):
        g = build_hexagon_patch(2)
        rep = g.validate()
        assert rep.ok
        for a, b in g.edges:
            assert eisenstein_norm(g.coord(b).point - g.coord(a).point) == 1

    def test_free_tolerance(self):
        g = free_graph([(0, 0), (1 + 5e-10, 0)], [(0, 1)])
        assert g.validate(tol=1e-9).ok
        g2 = free_graph([(0, 0), (1 + 5e-8, 0)], [(0, 1)])
        assert not g2.validate(tol=1e-9).ok

    def test_long_edge_brute_force_path(self):
        # a long edge and a distant crossing pair must still be caught
        g = free_graph([(0, 0), (10, 0), (5, -1), (5, 1)], [(0, 1), (2, 3)])
        rep = g.validate()
        assert any(v.kind == "Crossing" for v in rep.violations)


class TestConstruction:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            free_graph([(0, 0), (1, 0)], [(0, 0)])

    def test_rejects_unknown_vertex(self):
        with pytest.raises(ValueError):
            free_graph([(0, 0), (1, 0)], [(0, 7)])

    def test_rejects_duplicate_ids(self):
        with pytest.raises(ValueError):
            MatchstickGraph([(0, None), (0, None)], [])

    def test_deduplicates_edges(self):
        g = free_graph([(0, 0), (1, 0)], [(0, 1), (1, 0)])
        assert g.e == 1


class TestRotationSystem:
    def test_patch_center(self):
        g = build_hexagon_patch(1)
        g.validate()
        rot = rotation_system(g)
        center = next(vid for vid, c in g.vertices if c.point == E(0, 0))
        nbrs = rot[center]
        assert len(nbrs) == 6
        angles = [math.atan2(g.position(u)[1], g.position(u)[0]) % (2 * math.pi)
                  for u in nbrs]
        assert angles == sorted(angles)

    def test_triangle_corner(self):
        g = triangle()
        g.validate()
        rot = rotation_system(g)
        # neighbors of (0,0): (1,0) at 0 degrees, then (0,1) at 60 degrees
        assert rot[0] == (1, 2)

    def test_degree_one(self):
        g = lattice_graph([E(0, 0), E(1, 0)])
        g.validate()
        assert rotation_system(g)[0] == (1,)

    def test_requires_validated(self):
        g = triangle()
        with pytest.raises(ValueError):
            rotation_system(g)


class TestFaces:
    def test_triangle(self):
        g = triangle()
        g.validate()
        fs = faces(g)
        assert len(fs.faces) == 2
        assert len(fs.outer_face) == 3
        assert len(fs.inner_faces[0]) == 3

    def test_hexagon_patch(self):
        g = build_hexagon_patch(1)
        g.validate()
        fs = faces(g)
        assert len(fs.faces) == 7  # 6 triangles + outer hexagon
        assert g.n - g.e + len(fs.faces) == 2
        sizes = sorted(len(f) for f in fs.inner_faces)
        assert sizes == [3] * 6
        assert len(fs.outer_face) == 6

    def test_double_triangle(self):
        g = double_triangle()
        g.validate()
        fs = faces(g)
        inner = sorted(len(f) for f in fs.inner_faces)
        assert inner == [3, 3]
        assert len(fs.outer_face) == 4

    def test_darts_partition(self):
        g = build_hexagon_patch(2)
        g.validate()
        fs = faces(g)
        assert sum(len(f) for f in fs.faces) == 2 * g.e
        assert len(fs.face_of_dart) == 2 * g.e

    def test_single_vertex(self):
        g = lattice_graph([E(0, 0)])
        g.validate()
        fs = faces(g)
        assert fs.faces == ((),) and fs.outer_face_index == 0

    def test_tree_single_face(self):
        g = lattice_graph([E(0, 0), E(1, 0), E(2, 0)], edges=[(0, 1), (1, 2)])
        g.validate()
        fs = faces(g)
        assert len(fs.faces) == 1
        assert len(fs.faces[0]) == 4  # both darts of each bridge

    def test_disconnected_rejected(self):
        g = lattice_graph([E(0, 0), E(1, 0), E(5, 0), E(6, 0)],
                          edges=[(0, 1), (2, 3)])
        g.validate()
        with pytest.raises(ValueError):
            faces(g)

    def test_insertion_order_independence(self):
        g = build_hexagon_patch(1)
        g.validate()
        fs1 = faces(g)
        shuffled = list(g.vertices)[::-1]
        g2 = MatchstickGraph(shuffled, g.edges, g.frames)
        g2.validate()
        fs2 = faces(g2)
        assert fs1.faces == fs2.faces
        assert fs1.outer_face_index == fs2.outer_face_index

    @settings(max_examples=30, deadline=None)
    @given(st.integers(min_value=3, max_value=40), st.integers(min_value=0, max_value=999))
    def test_euler_formula_fuzz(self, n, seed):
        g = random_lattice_subgraph(n, seed=seed)
        fs = faces(g)
        assert g.n - g.e + len(fs.faces) == 2
        assert sum(len(f) for f in fs.faces) == 2 * g.e


class TestBoundary:
    def test_triangle(self):
        g = triangle()
        g.validate()
        cycle, b = boundary(g)
        assert b == 3 and set(cycle) == {0, 1, 2}

    def test_patches(self):
        for k, expect in ((1, 6), (2, 12)):
            g = build_hexagon_patch(k)
            g.validate()
            _, b = boundary(g)
            assert b == 6 * k == expect

    def test_not_two_connected_rejected(self):
        g = lattice_graph([E(0, 0), E(1, 0)])
        g.validate()
        with pytest.raises(ValueError):
            boundary(g)


class TestConnectivity:
    def test_triangle(self):
        g = triangle()
        info = connectivity(g)
        assert (info.connected, info.two_connected, info.min_degree) == (True, True, 2)
        assert len(info.blocks) == 1
        assert info.blocks[0].vertices == frozenset({0, 1, 2})

    def test_two_triangles_sharing_vertex(self):
        pts = [E(0, 0), E(1, 0), E(0, 1), E(2, 0), E(1, 1)]
        g = lattice_graph(pts, edges=[(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (4, 1)])
        info = connectivity(g)
        assert info.connected and not info.two_connected
        assert info.min_degree == 2
        assert len(info.blocks) == 2
        assert info.cut_vertices == frozenset({1})

    def test_two_disjoint_edges(self):
        g = lattice_graph([E(0, 0), E(1, 0), E(5, 0), E(6, 0)],
                          edges=[(0, 1), (2, 3)])
        info = connectivity(g)
        assert (info.connected, info.two_connected, info.min_degree) == (False, False, 1)
        assert len(info.blocks) == 2

    def test_isolated_vertex_block(self):
        g = lattice_graph([E(0, 0), E(5, 5)], edges=[])
        info = connectivity(g)
        assert not info.connected
        assert info.min_degree == 0
        assert len(info.blocks) == 2

    def test_block_ordering_deterministic(self):
        pts = [E(0, 0), E(1, 0), E(0, 1), E(2, 0), E(1, 1)]
        g = lattice_graph(pts, edges=[(0, 1), (1, 2), (2, 0), (1, 3), (3, 4), (4, 1)])
        blocks = connectivity(g).blocks
        assert min(blocks[0].vertices) <= min(blocks[1].vertices)


class TestJson:
    def test_round_trip_lattice(self):
        g = build_hexagon_patch(2)
        j = g.to_json()
        g2 = MatchstickGraph.from_json(j)
        assert g2.to_json() == j
        assert g2.edges == g.edges
        assert all(g2.coord(v) == g.coord(v) for v in g2.ids())

    def test_round_trip_free_bit_exact(self):
        g = free_graph([(0.1 + 0.2, 1.0 / 3.0), (math.pi, -1e-17)], [(0, 1)])
        g2 = MatchstickGraph.from_json(g.to_json())
        for vid in g.ids():
            assert (g.coord(vid).x, g.coord(vid).y) == (g2.coord(vid).x, g2.coord(vid).y)

    def test_canonical_ordering(self):
        g = lattice_graph([E(0, 0), E(1, 0), E(0, 1)])
        shuffled = MatchstickGraph(list(g.vertices)[::-1], sorted(g.edges)[::-1], g.frames)
        assert g.to_json() == shuffled.to_json()

    def test_format_shape(self):
        import json
        data = json.loads(build_hexagon_patch(1).to_json())
        assert set(data) == {"frames", "vertices", "edges"}
        assert data["frames"][0]["id"] == 0
        assert {"frame", "m", "n"} == set(data["vertices"][0]["lattice"])


class TestFaceCycleShape:
    @settings(max_examples=25, deadline=None)
    @given(st.integers(min_value=3, max_value=40), st.integers(min_value=0, max_value=500))
    def test_two_connected_faces_are_simple_cycles(self, n, seed):
        g = random_lattice_subgraph(n, seed=seed)
        if not connectivity(g).two_connected:
            return
        fs = faces(g)
        for cycle in fs.faces:
            assert len(set(cycle)) == len(cycle)

    def test_exactly_one_outer_face(self):
        g = build_hexagon_patch(3)
        g.validate()
        fs = faces(g)
        outer = [i for i, f in enumerate(fs.faces) if i == fs.outer_face_index]
        assert len(outer) == 1
