from fractions import Fraction

import pytest

from plmobius import strips
from plmobius.exactgeom import P, midpoint
from test_surfaces import brute_orientable

STRIPS = strips.all_strips()


def diagonal_area_squared(q):
    """Oracle: a planar convex quad has area |AC x BD| / 2."""
    a, b, c, d = q.vertices
    return (c - a).cross(d - b).norm2() / 4


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_faces(i):
    f = STRIPS[i]
    assert [q.kind for q in f.faces] == ["trapezoid", "parallelogram"] * 3
    assert all(strips.is_isosceles(q) for q in f.faces[::2])
    assert all(diagonal_area_squared(q) == 8 for q in f.faces)


def test_face_vertices_of_m1():
    f = STRIPS[1]
    assert f.faces[0].vertices == (P(1, 0, 3), P(2, 0, 3), P(3, 1, 2), P(0, 1, 2))
    assert f.faces[1].vertices == (P(2, 0, 3), P(2, 0, 1), P(3, 1, 0), P(3, 1, 2))


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_area_is_12_root_2(i):
    a = strips.strip_area(STRIPS[i])
    assert a.terms == ((2, Fraction(12)),)
    assert str(a) == "12√2"


@pytest.mark.parametrize("i", [1, 2, 3, 4])
@pytest.mark.parametrize("diagonal", ["low", "high"])
def test_mobius_topology(i, diagonal):
    mesh = strips.build_mesh(STRIPS[i], diagonal)
    r = mesh.surface()
    assert (len(mesh.vertices), len(mesh.triangles)) == (12, 12)
    assert r.euler_characteristic == 0
    assert r.boundary_components == 1
    assert not r.orientable
    assert not brute_orientable(mesh.triangles)
    assert mesh.boundary_point_set_matches()


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_embedding(i):
    rep = strips.embedding_report(STRIPS[i])
    assert rep.ok


def test_legs_meet_at_q_vertices():
    assert strips.leg_midpoints(STRIPS[1]) == [
        P(0.5, 0.5, 2.5), P(2.5, 0.5, 2.5), P(2.5, 0.5, 0.5),
        P(2.5, 2.5, 0.5), P(0.5, 2.5, 0.5), P(0.5, 2.5, 2.5),
    ]


def test_census():
    c = strips.intersection_census(STRIPS)
    sizes = {k: len(v) for k, v in c["pieces"].items()}
    assert sizes == {
        ("crease", "parallelogramxparallelogram"): 24,
        ("crease", "parallelogramxtrapezoid"): 24,
        ("transversal", "parallelogramxtrapezoid"): 12,
        ("transversal", "trapezoidxtrapezoid"): 8,
    }
    assert len(c["union"]) == 44


def test_q_edges_by_point_membership():
    """Oracle: sample points of each Q edge against every face."""
    cube = strips.derive_cube_bicoloring(STRIPS)
    assert len(cube.edges) == 12 and cube.check() == []
    for e in cube.edges:
        a, b = e.segment
        for t in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            p = a + (b - a).scale(t)
            hits = {(i, q.kind) for i, f in STRIPS.items() for q in f.faces if q.contains(p)}
            assert hits == {(e.trapezoid_color, "trapezoid"), (e.parallelogram_color, "parallelogram")}


def test_mid_segments_cover_q():
    q = {tuple(sorted(e.segment)) for e in strips.derive_cube_bicoloring(STRIPS).edges}
    for kind in ("trapezoid", "parallelogram"):
        mids = [strips.mid_segment(f) for s in STRIPS.values() for f in s.faces if f.kind == kind]
        assert sorted(mids) == sorted(q)


def test_top_front_edge():
    e = strips.derive_cube_bicoloring(STRIPS).by_segment()[(P(0.5, 0.5, 0.5), P(2.5, 0.5, 0.5))]
    assert (e.trapezoid_color, e.parallelogram_color) == (2, 3)


def test_printed_bicoloring_comparison():
    cmp = strips.compare_with_printed_q(strips.derive_cube_bicoloring(STRIPS))
    assert cmp["agree_subscript_is_trapezoid"] == 4
    assert cmp["agree_swapped"] == 2
    assert strips.printed_q_as_cube().check() == [
        "trapezoid edges of color 1 are not disjoint",
        "trapezoid edges of color 4 are not disjoint",
    ]


def test_cube_q_check_catches_bad_coloring():
    cube = strips.derive_cube_bicoloring(STRIPS)
    e = cube.edges[0]
    bad = strips.CubeQ((strips.CubeEdge(e.segment, e.trapezoid_color, e.trapezoid_color),) + cube.edges[1:])
    assert bad.check()


def test_compound_reflections():
    rep = strips.compound_reflection_check(STRIPS)
    assert rep["F_O"]["images"] == {1: None, 2: None, 3: None, 4: None}
    assert rep["F_O"]["image_is_mirror_compound"]
    assert rep["half_turns"]["R_d^2"] == {1: 3, 2: 4, 3: 1, 4: 2}
    assert strips.compound_orbit_size(STRIPS) == 2


def test_q_vertex():
    assert strips.is_q_vertex(P(0.5, 2.5, 0.5))
    assert not strips.is_q_vertex(midpoint(P(0, 0, 0), P(3, 1, 1)))
