"""Acceptance suite: one test per acceptance criterion."""

import itertools
import subprocess
import sys
from fractions import Fraction

from plmobius import claims, curves, embeddings, knots, polylink, strips, symmetry
from plmobius import factorizations as fz
from plmobius.exactgeom import REFLECT_X3, quad_area_squared


def verdict(claim_id):
    (r,) = claims.run_claims([claim_id])
    return r


def test_01_curve_suite():
    for i, c in curves.all_canonical_curves().items():
        assert len(c.segments) == 12
        assert all(s.axis() is not None for s in c.segments)
        assert c.segments[-1].b == c.segments[0].a
        assert c.length() == 24
    r = verdict("EQ2.curve")
    assert r.verdict == claims.CORRECTED
    assert {c.segment_index for c in curves.curve_corrections(2)} == {10, 11}


def test_02_strip_topology():
    for i, f in strips.all_strips().items():
        mesh = strips.build_mesh(f)
        rep = mesh.surface()
        assert rep.euler_characteristic == 0
        assert not rep.orientable
        assert rep.boundary_components == 1
        assert mesh.boundary_point_set_matches()
        assert mesh.boundary == curves.canonical_curve(i)


def test_03_area():
    for f in strips.all_strips().values():
        assert len(f.faces) == 6
        assert [quad_area_squared(q) for q in f.faces] == [Fraction(8)] * 6
        assert str(strips.strip_area(f)) == "12√2"


def test_04_knot_suite():
    polys = set()
    for c in curves.all_canonical_curves().values():
        dirs = knots.accepted_directions(c.vertices, 3)
        assert len(dirs) >= 3
        for d in dirs:
            diag = knots.projection_along(c.vertices, d)
            assert knots.knot_determinant(diag) == 3
            j = knots.jones_polynomial(diag)
            assert knots.is_chiral_jones(j)
            polys.add(j)
        m = knots.generic_projection(knots.transform_curve(REFLECT_X3, c.vertices))
        assert knots.jones_polynomial(m) == j.mirror() != j
    assert len(polys) == 1


def test_05_intersection_suite():
    cs = curves.all_canonical_curves()
    for i, j in itertools.combinations(sorted(cs), 2):
        assert curves.curve_pairwise_intersection(cs[i], cs[j]).dimension <= 0
    cube = strips.derive_cube_bicoloring()
    q = {tuple(sorted(e.segment)) for e in cube.edges}
    assert len(q) == 12
    half = {Fraction(1, 2), Fraction(5, 2)}
    assert all(c in half for seg in q for p in seg for c in p)
    cmp = strips.compare_with_printed_q(cube)
    assert len(cmp["rows"]) == 12
    ledgered = verdict("EQ5.bicoloring").data["mismatches"]
    assert ledgered == [r for r in cmp["rows"] if not r["agrees"]]
    union = set(strips.intersection_census()["union"])
    assert union == q


def test_06_symmetry_suite():
    G = symmetry.compound_group()
    GT = symmetry.stabilizer(symmetry.triangle_compound_shape())
    assert G.elements == GT.elements
    for g in symmetry.triangle_groups().values():
        assert g.order == 6
    for cid in ("OBS3.order", "EQ7.permutations", "EQ14.rotations", "REFL.identities", "COR5.intersections"):
        assert verdict(cid).verdict in (claims.CONFIRMED, claims.REFUTED), cid


def test_07_polylink_suite():
    for cid in ("EQ8.vertices", "EQ10.midpoints", "EQ11.correspondence", "POLY.cuboctahedron"):
        assert verdict(cid).verdict == claims.CONFIRMED, cid
    holes = verdict("EQ9.holes")
    assert holes.verdict == claims.CORRECTED
    assert holes.data["normalized"] == ["2,25"]
    assert polylink.cuboctahedron_check()["is_cuboctahedron"]
    got = polylink.six_cycles()
    diffs = {i: polylink.six_cycle_diff(got[i], polylink.PRINTED_SIX_CYCLES[i]) for i in got}
    assert verdict("EQ12.six_cycles").data["diffs"] == {i: d for i, d in diffs.items() if d}


def test_08_factorization_suite():
    f = fz.canonical_rainbow_factorization()
    assert f.is_valid()
    assert fz.rainbow_count(f) == 24 and fz.is_q2_rainbow(f)
    counts = fz.classify_four_cycles(f).counts
    assert [counts[t] for t in fz.TAGS] == [8, 8, 8]
    for a, b in itertools.combinations(fz.COLORS, 2):
        cyc = fz.two_factor_union(f, a, b)
        assert sorted(len(c) for c in cyc) == [8, 8]
        assert all(fz.antipodal_subpaths(c) for c in cyc)
    fam = fz.enumerate_rainbow_factorizations()
    assert fam and fz.membership(f, fam) == "exact"


def test_09_quotient_suite():
    q = fz.antipodal_quotient()
    assert fz.is_k44(q.graph)
    assert (tuple(fz.V0), tuple(fz.V1)) == ((0, 3, 5, 6), (1, 2, 4, 7))
    rep = fz.project_factorizations(fz.canonical_rainbow_factorization(), fz.parallel_factorization())
    assert len(rep.intersections) == 16 and set(rep.intersections.values()) == {1}
    sq = fz.euler_square(rep.fstar, rep.pstar)
    assert sq.is_graeco_latin()
    assert sq.cells == fz.printed_euler_square().cells
    assert not fz.is_q2_rainbow(rep.fstar)


def test_10_counting_suite():
    c = fz.automorphism_counts()
    assert c["aut_q4"] == 384
    assert c["induced_on_quotient"] == 192
    assert c["aut_k44"] == 1152
    assert c["f_strict"] == 16


def test_11_embedding_suite():
    f = fz.canonical_rainbow_factorization()
    cor8 = embeddings.type_union_complex(f, (fz.TAGS[0], fz.TAGS[1]))
    rep = embeddings.verify_surface(cor8)
    assert rep.closed and rep.orientable and rep.euler_characteristic == 0
    subs = embeddings.twelve_toroidal_subgraphs(f)
    assert len(subs) == 12 and len({s.deleted for s in subs}) == 12
    for s in subs:
        assert s.surface.is_torus
        assert s.census() == {4: 4, 8: 4}
        assert embeddings.dual_of_dual_matches(s.complex)
    fstar = fz.project(f)
    tori = [(cor8, f)] + [(c.complex, fstar) for c in embeddings.k44_type_complexes(f)]
    for fc, coloring in tori:
        assert fc is not None and embeddings.verify_surface(fc).is_torus
        assert embeddings.dual_report(fc, coloring).self_dually_rainbow
        assert embeddings.dual_of_dual_matches(fc)


def test_12_determinism():
    cmd = [sys.executable, "-m", "plmobius", "verify", "all", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=False)
    b = subprocess.run(cmd, capture_output=True, check=False)
    assert a.returncode == b.returncode == 0
    assert a.stdout and a.stdout == b.stdout
