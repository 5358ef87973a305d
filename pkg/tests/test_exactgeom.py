from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from plmobius.exactgeom import (
    CENTER,
    F_O,
    IDENTITY,
    P,
    R_D,
    R_D2,
    R_H,
    R_V,
    PlanarQuad,
    Segment3,
    all_isometries,
    apply_isometry,
    clip_to_box,
    format_coord,
    lattice_point,
    meets_open_box,
    midpoint,
    quad_area_squared,
    quad_quad_intersection,
    segment_intersection,
)

quarters = st.integers(min_value=0, max_value=12).map(lambda n: Fraction(n, 4))
points = st.builds(P, quarters, quarters, quarters)
isos = st.sampled_from(all_isometries())


def test_format_coord():
    assert format_coord(Fraction(3, 2)) == "1.5"
    assert format_coord(Fraction(9, 4)) == "2.25"
    assert format_coord(Fraction(3)) == "3"
    assert format_coord(Fraction(-1, 4)) == "-0.25"
    with pytest.raises(ValueError):
        format_coord(Fraction(1, 3))


@given(quarters)
def test_format_coord_round_trips(c):
    text = format_coord(c)
    assert Fraction(text) == c
    assert len(text.partition(".")[2]) <= 2


def test_lattice_point_digits():
    assert lattice_point("103") == P(1, 0, 3)


def test_segment_intersection_kinds():
    a = Segment3(P(0, 0, 0), P(2, 0, 0))
    assert segment_intersection(a, Segment3(P(1, -1, 0), P(1, 1, 0))).points == (P(1, 0, 0),)
    assert segment_intersection(a, Segment3(P(1, 0, 0), P(3, 0, 0))).kind == "segment"
    assert segment_intersection(a, Segment3(P(0, 1, 0), P(2, 1, 0))).kind == "empty"
    assert segment_intersection(a, Segment3(P(0, 0, 1), P(2, 1, 1))).kind == "empty"


@given(points, points, points, points)
def test_segment_intersection_symmetric(a, b, c, d):
    if a == b or c == d:
        return
    s, t = Segment3(a, b), Segment3(c, d)
    st_, ts = segment_intersection(s, t), segment_intersection(t, s)
    assert st_.kind == ts.kind
    assert set(st_.points) == set(ts.points)
    for p in st_.points:
        assert s.contains(p) and t.contains(p)


def test_forty_eight_isometries():
    group = all_isometries()
    assert len(set(group)) == 48
    assert sum(g.is_rotation() for g in group) == 24
    assert IDENTITY in group


@given(isos, isos, points)
def test_composition_acts_correctly(g, h, p):
    assert apply_isometry(g @ h, p) == apply_isometry(g, apply_isometry(h, p))
    assert apply_isometry(g.inverse(), apply_isometry(g, p)) == p
    assert apply_isometry(g, CENTER) == CENTER


@given(isos, points, points)
def test_isometries_preserve_distance(g, a, b):
    assert (g(a) - g(b)).norm2() == (a - b).norm2()


def test_named_elements():
    assert F_O.det() == -1 and F_O.order() == 2
    assert R_D.order() == R_V.order() == R_H.order() == 4
    assert R_D @ R_D == R_D2
    # in-depth axis x1 = x2 = 1.5 is fixed
    assert R_D(P(1.5, 1.5, 0)) == P(1.5, 1.5, 0)


def test_quad_kinds_and_area():
    # the construction only uses trapezoids with bases 1 and 3
    trap = PlanarQuad((P(0, 0, 0), P(3, 0, 0), P(2, 1, 0), P(1, 1, 0)))
    para = PlanarQuad((P(0, 0, 0), P(2, 0, 0), P(3, 1, 0), P(1, 1, 0)))
    assert trap.kind == "trapezoid" and para.kind == "parallelogram"
    assert quad_area_squared(trap) == 4
    assert quad_area_squared(para) == 4
    assert PlanarQuad((P(0, 0, 0), P(4, 0, 0), P(3, 1, 0), P(1, 1, 0))).kind == "quad"


def test_quad_intersection_transversal():
    a = PlanarQuad((P(0, 0, 0), P(2, 0, 0), P(2, 2, 0), P(0, 2, 0)))
    b = PlanarQuad((P(1, -1, -1), P(1, 3, -1), P(1, 3, 1), P(1, -1, 1)))
    hit = quad_quad_intersection(a, b)
    assert hit.kind == "segment"
    assert set(hit.points) == {P(1, 0, 0), P(1, 2, 0)}


def test_clip_and_open_box():
    sq = [P(0, 0, 1.5), P(3, 0, 1.5), P(3, 3, 1.5), P(0, 3, 1.5)]
    clipped = clip_to_box(sq, 1, 2)
    assert set(clipped) == {P(1, 1, 1.5), P(2, 1, 1.5), P(2, 2, 1.5), P(1, 2, 1.5)}
    assert meets_open_box(sq, 1, 2)
    # a face of the inner cube touches but does not enter it
    assert not meets_open_box([P(0, 0, 1), P(3, 0, 1), P(3, 3, 1), P(0, 3, 1)], 1, 2)


def test_midpoint():
    assert midpoint(P(0, 0, 0), P(3, 1, 2)) == P(1.5, 0.5, 1)
