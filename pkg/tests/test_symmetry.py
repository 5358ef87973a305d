import itertools

import pytest

from plmobius import symmetry
from plmobius.exactgeom import (
    F_O,
    R_D,
    R_D2,
    R_H,
    R_H2,
    R_V,
    R_V2,
    REFLECT_X1,
    REFLECT_X2,
    REFLECT_X3,
    all_isometries,
    midpoint,
)
from plmobius.exactgeom import polygon_area_squared, polygon_intersection
from plmobius.strips import SurdSum, all_strips

STRIPS = all_strips()
G = symmetry.compound_group()


def covered_area(g, q, faces) -> SurdSum:
    """Exact area of g(q) lying in the compound; compound faces never overlap in 2D."""
    img = [g(p) for p in q.vertices]
    total = SurdSum(())
    for h in faces:
        hit = polygon_intersection(img, h.vertices)
        if hit.kind == "region":
            total = total + SurdSum.sqrt_of(polygon_area_squared(hit.points))
    return total


def area_oracle_preserves(g) -> bool:
    """Independent check: the image of every face is covered by the compound."""
    faces = [q for f in STRIPS.values() for q in f.faces]
    full = SurdSum.sqrt_of(8)
    return all(covered_area(g, q, faces).terms == full.terms for q in faces)


@pytest.mark.parametrize("g", [R_D, R_V, R_H, R_D2, R_V2, R_H2])
def test_area_oracle_keeps_turns(g):
    assert g in G
    assert area_oracle_preserves(g)


@pytest.mark.parametrize("g", [F_O, REFLECT_X1, REFLECT_X2, REFLECT_X3])
def test_area_oracle_rejects_reflections(g):
    assert g not in G
    assert not area_oracle_preserves(g)


def test_compound_group():
    assert G.order == 24 and G.rotations_only()
    assert G.elements == {g for g in all_isometries() if g.is_rotation()}
    assert G.elements == symmetry.stabilizer(symmetry.triangle_compound_shape()).elements


def test_printed_generators():
    rep = symmetry.compound_report()
    assert rep["printed_generators_span"] == 48
    assert rep["quarter_turns_span"] == 24
    assert rep["half_turns_and_FO_span"] == 8
    assert rep["permutations"]["R_d"] == "(1 4 3 2)"
    assert rep["permutations"]["R_d^2"] == "(1 3)(2 4)"
    assert rep["permutations"]["F_O"] is None


def test_group_closure_is_enforced():
    with pytest.raises(ValueError):
        symmetry.IsometryGroup(frozenset({R_D}))


def test_strip_and_triangle_stabilizers():
    sg, tg = symmetry.strip_groups(), symmetry.triangle_groups()
    for i in sg:
        assert sg[i].elements == tg[i].elements
        assert sg[i].order == 6 and sg[i].is_dihedral()
        assert sg[i].order_census() == {1: 1, 2: 3, 3: 2}


def test_intersections():
    rep = symmetry.subgroup_intersections()
    assert set(rep["G_cap_G_i"].values()) == {6}
    assert set(rep["G_i_cap_G_j"].values()) == {2}


def test_cube_surface_has_all_isometries():
    assert symmetry.stabilizer(symmetry.cube_surface_shape()).order == 48


def test_homomorphism():
    assert symmetry.is_homomorphism_on(G)


def test_two_compounds():
    assert symmetry.mirror_compound_images() == {"compounds_in_orbit": 2, "outside_G": 24, "to_other_compound": 24}


def test_labeling_repair():
    lab, changes = symmetry.correct_labeling()
    assert changes == [{"label": 7, "printed": "033", "corrected": "333"}]
    assert all(symmetry.binary_label("".join("0" if c == 0 else "3" for c in p)) == k
               for k, p in enumerate(lab.corners))


def test_permutation_helpers():
    p = symmetry.parse_cycles("(124)(365)")
    assert p == (0, 2, 4, 6, 1, 3, 5, 7)
    assert symmetry.inverse_permutation(p) == symmetry.parse_cycles("(142)(563)")
    assert symmetry.permutation_cycles((2, 1, 4, 3)) == "(1 2)(3 4)"


def test_rotation_display():
    rep = symmetry.verify_rotation_display()
    assert all(all(v.values()) for v in rep.values())


def test_reflection_display():
    rep = symmetry.verify_reflection_identities()
    assert rep["distinct"] == 6 and all(rep["equalities"].values())
    for key, e in rep["entries"].items():
        assert e["realized"] and e["involution"] and e["rotation"]
        assert e["in_stab_T_i"] and e["in_stab_M_i"]
    swapped = {k: e["bisector_vertex"] for k, e in rep["entries"].items() if not e["is_bisector_half_turn"]}
    assert swapped == {(3, 1): 3, (3, 3): 1}


def test_group_laws():
    els = G.sorted()
    for a, b, c in itertools.islice(itertools.product(els, repeat=3), 0, None, 37):
        assert (a @ b) @ c == a @ (b @ c)
    assert all(g @ g.inverse() in G for g in els)


def test_mirror_parallelograms_overlap_in_plane():
    # trapezoids map onto trapezoids; parallelograms land on different coplanar ones
    faces = [q for f in STRIPS.values() for q in f.faces]
    keys = {q.key() for q in faces}
    for g in (F_O, REFLECT_X3):
        images = [frozenset(g(p) for p in q.vertices) for q in faces]
        assert sum(k in keys for k in images) == 12
        partial = [covered_area(g, q, faces) for q in faces if q.kind == "parallelogram"]
        assert all(a.terms != SurdSum.sqrt_of(8).terms and a.terms for a in partial)
