from fractions import Fraction

from plmobius import polylink
from plmobius.exactgeom import CENTER, P, midpoint

TRIS = polylink.build_triangles()


def test_triangle_vertices():
    for i, t in TRIS.items():
        assert t.vertices == polylink.PRINTED_VERTICES[i]
        assert t.side_squared() == [Fraction(27, 2)] * 3
        assert t.centroid() == CENTER


def test_decimal_comma_normalization():
    assert polylink.normalized_tokens() == ["2,25"]
    assert polylink.normalize_decimal("2,25") == Fraction(9, 4)


def test_holes():
    inner = polylink.build_inner_triangles(TRIS)
    for i, t in inner.items():
        assert t.vertices == polylink.printed_hole_vertices(i)
        assert t.vertices == tuple(midpoint(v, CENTER) for v in TRIS[i].vertices)
        assert t.side_squared() == [Fraction(27, 8)] * 3
    assert all(h.is_concentric_homothetic() for h in polylink.hollow_triangles().values())


def test_annulus_triangulation():
    fc_faces = polylink.hollow_triangles()[1].annulus_triangles()
    from plmobius.surfaces import FaceComplex, verify_surface

    r = verify_surface(FaceComplex.from_vertex_walks(fc_faces))
    assert (r.euler_characteristic, r.boundary_components, r.orientable) == (0, 2, True)


def test_side_midpoints():
    for i in TRIS:
        assert polylink.side_midpoints(i, TRIS) == polylink.PRINTED_SIDE_MIDPOINTS[i]


def test_correspondence():
    corr = polylink.build_correspondence(TRIS)
    assert corr.is_bijection()
    assert polylink.correspondence_diff(corr) == []
    # no midpoint of T_i is a hole vertex of T_i itself
    assert all(i != target[0] for (i, _), target in corr.table.items())


def test_six_cycles():
    got = polylink.six_cycles()
    diffs = {i: polylink.six_cycle_diff(got[i], polylink.PRINTED_SIX_CYCLES[i]) for i in got}
    assert diffs[1] == diffs[3] == []
    assert diffs[2] == [{"position": 1, "printed": ["A", 4, 1], "computed": ["A", 4, 3]}]
    assert diffs[4] == [{"position": 4, "printed": ["B", 4, 1], "computed": ["B", 4, 3]}]
    assert len({x for x in got[4] if x[0] == "B"}) == 3


def test_cuboctahedron():
    rep = polylink.cuboctahedron_check(TRIS)
    assert rep["is_cuboctahedron"]
    assert rep["radius_squared"] == [Fraction(9, 2)]
    assert rep["edge_squared"] == Fraction(9, 2)
    assert (rep["triangles"], rep["squares"], rep["euler_characteristic"]) == (8, 6, 2)


def test_cuboctahedron_oracle():
    """The 12 points are the permutations of (0, 1.5, 3) up to the sign pattern about O."""
    pts = {p - CENTER for t in TRIS.values() for p in t.vertices}
    assert all(sorted(abs(c) for c in p) == [0, Fraction(3, 2), Fraction(3, 2)] for p in pts)
    assert len(pts) == 12


def test_outer_triangles_are_linked():
    assert set(polylink.linking_numbers(TRIS).values()) == {-1}


def test_boundary_contacts():
    contacts = polylink.boundary_contacts()
    assert contacts[1] == [(2, 2), (3, 3), (4, 1)]
    assert all(len(v) == 3 for v in contacts.values())


def test_normals_are_cube_diagonals():
    for t in TRIS.values():
        n = t.normal()
        assert {abs(c) for c in n} == {Fraction(27, 4)}
    assert TRIS[1].normal() == P(6.75, 6.75, 6.75)
