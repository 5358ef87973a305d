"""The claims ledger: one stable id per checked statement.

Each check returns a verdict with human-readable details and structured
data.  ``kind`` separates statements taken from the source text
(``"stated"``) from consistency checks of this package (``"internal"``);
only a REFUTED internal claim makes a run fail.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import curves, embeddings, factorizations as fz, knots, polylink, strips, symmetry
from .exactgeom import (
    R_D2,
    R_H2,
    R_V2,
    REFLECT_X1,
    REFLECT_X2,
    REFLECT_X3,
    apply_isometry,
    lattice_point,
    quad_area_squared,
)
from .exports import coord_text

CONFIRMED = "CONFIRMED"
CORRECTED = "CORRECTED"
REFUTED = "REFUTED"
UNDECIDED = "UNDECIDED"
VERDICTS = (CONFIRMED, CORRECTED, REFUTED, UNDECIDED)

SCHEMA = "plmobius.claims/1"
WORKERS_ENV = "PLMOBIUS_WORKERS"


@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    verdict: str
    details: str
    data: dict = field(default_factory=dict)
    kind: str = "stated"

    def as_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "kind": self.kind,
            "verdict": self.verdict,
            "details": self.details,
            "data": jsonable(self.data),
        }


@dataclass(frozen=True)
class Claim:
    claim_id: str
    kind: str
    statement: str
    check: Callable[[], tuple[str, str, dict]]

    def run(self) -> ClaimReport:
        verdict, details, data = self.check()
        if verdict not in VERDICTS:
            raise AssertionError(f"{self.claim_id}: bad verdict {verdict!r}")
        return ClaimReport(self.claim_id, verdict, details, data, self.kind)


def jsonable(x):
    """Plain JSON values; exact rationals become decimal or fraction strings."""
    if isinstance(x, bool) or x is None or isinstance(x, (int, str)):
        return x
    if isinstance(x, Fraction):
        return coord_text(x)
    if isinstance(x, float):
        return repr(x)
    if isinstance(x, dict):
        return {_key(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (set, frozenset)):
        return sorted((jsonable(v) for v in x), key=repr)
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return str(x)


def _key(k) -> str:
    if isinstance(k, str):
        return k
    if isinstance(k, tuple):
        return ",".join(_key(v) for v in k)
    if isinstance(k, Fraction):
        return coord_text(k)
    return str(k)


def _verdict(ok: bool) -> str:
    return CONFIRMED if ok else REFUTED


# --- shared computations (cached; all inputs are fixed) -------------------------


@lru_cache(maxsize=None)
def _strips():
    return strips.all_strips()


@lru_cache(maxsize=None)
def _curves():
    return curves.all_canonical_curves()


@lru_cache(maxsize=None)
def _F():
    return fz.canonical_rainbow_factorization()


@lru_cache(maxsize=None)
def _P():
    return fz.parallel_factorization()


@lru_cache(maxsize=None)
def _projection():
    return fz.project_factorizations(_F(), _P())


@lru_cache(maxsize=None)
def _compound_report():
    return symmetry.compound_report()


@lru_cache(maxsize=None)
def _labeling():
    return symmetry.correct_labeling()


@lru_cache(maxsize=None)
def _reflections():
    return symmetry.verify_reflection_identities(_labeling()[0])


@lru_cache(maxsize=None)
def _aut_counts():
    return fz.automorphism_counts(_F())


@lru_cache(maxsize=None)
def _enumeration():
    return tuple(fz.enumerate_rainbow_factorizations())


@lru_cache(maxsize=None)
def _twelve():
    return tuple(embeddings.twelve_toroidal_subgraphs(_F()))


@lru_cache(maxsize=None)
def _k44_complexes():
    return tuple(embeddings.k44_type_complexes(_F()))


@lru_cache(maxsize=None)
def _cor8_complex():
    return embeddings.type_union_complex(_F(), (fz.TAGS[0], fz.TAGS[1]))


@lru_cache(maxsize=None)
def _census():
    return strips.intersection_census(_strips())


# --- curves ---------------------------------------------------------------------


def _curve_check(i: int):
    raw = curves.curve_as_printed(i)
    default_errors = curves._check(raw, curves.DEFAULT_CONVENTION)
    conv = curves.best_convention(raw)
    fixes = curves.curve_corrections(i)
    swapped = [k + 1 for k, r in enumerate(raw) if r.normalized()[4]]
    data = {
        "default_convention_errors": [
            {"segment": e.segment_index, "rule": e.violated_rule, "details": e.details} for e in default_errors
        ],
        "letter_axes": {k: v + 1 for k, v in sorted(conv.items())},
        "corrections": [c.as_dict() for c in fixes],
        "swapped_script_tokens": swapped,
    }
    notes = []
    if conv != curves.DEFAULT_CONVENTION:
        notes.append("direction letters follow a permuted letter-to-axis map")
    if fixes:
        notes.append(f"{len({c.segment_index for c in fixes})} segments amended")
    if swapped:
        notes.append(f"{len(swapped)} tokens with sub/superscript swapped")
    if not notes:
        return CONFIRMED, f"C{i} table is valid as printed", data
    return CORRECTED, f"C{i}: " + "; ".join(notes), data


def _curve_length():
    data = {}
    ok = True
    for i, c in _curves().items():
        n = len(c.segments)
        closed = c.segments[-1].b == c.segments[0].a
        axis = all(s.axis() is not None for s in c.segments)
        data[i] = {"segments": n, "closed": closed, "axis_aligned": axis, "length": c.length(),
                   "length_census": c.length_census()}
        ok = ok and n == 12 and closed and axis and c.length() == 24
    return _verdict(ok), "each canonical curve: 12 axis-parallel segments, closed, length 24", data


# --- strips ---------------------------------------------------------------------


def _strip_area():
    areas = {i: strips.strip_area(f) for i, f in _strips().items()}
    data = {i: str(a) for i, a in areas.items()}
    ok = all(a.terms == ((2, Fraction(12)),) for a in areas.values())
    return _verdict(ok), "exact area of every strip is 12*sqrt(2)", data


def _face_area():
    data = {i: [quad_area_squared(q) for q in f.faces] for i, f in _strips().items()}
    ok = all(v == [Fraction(8)] * 6 for v in data.values())
    return _verdict(ok), "six planar faces per strip, each of squared area 8", data


def _strip_topology():
    data = {}
    ok = True
    for i, f in _strips().items():
        mesh = strips.build_mesh(f)
        rep = mesh.surface()
        emb = strips.embedding_report(f)
        data[i] = rep.as_dict() | {
            "boundary_is_curve": mesh.boundary_point_set_matches(),
            "inside_cube": emb.inside_cube,
            "avoids_inner_cube": emb.avoids_inner_cube,
            "adjacent_faces_share_leg": emb.adjacent_share_leg,
            "other_faces_disjoint": emb.others_disjoint,
        }
        ok = ok and (
            rep.euler_characteristic == 0
            and not rep.orientable
            and rep.boundary_components == 1
            and mesh.boundary_point_set_matches()
            and emb.ok
        )
    return _verdict(ok), "each strip is an embedded Mobius band in the shell bounded by its curve", data


def _mesh_diagonals():
    data = {}
    ok = True
    for i, f in _strips().items():
        lo, hi = (strips.build_mesh(f, d).surface().as_dict() for d in ("low", "high"))
        data[i] = lo == hi
        ok = ok and lo == hi
    return _verdict(ok), "strip topology does not depend on the triangulation diagonal", data


def _faces_alternate():
    data = {}
    ok = True
    for i, f in _strips().items():
        kinds = [q.kind for q in f.faces]
        iso = [strips.is_isosceles(q) for q in f.faces if q.kind == "trapezoid"]
        data[i] = {"kinds": kinds, "trapezoids_isosceles": all(iso)}
        ok = ok and kinds == ["trapezoid", "parallelogram"] * 3 and all(iso)
    return _verdict(ok), "faces alternate isosceles trapezoid / parallelogram", data


def _curve_intersections():
    cs = _curves()
    data = {}
    ok = True
    for i, j in itertools.combinations(sorted(cs), 2):
        hit = curves.curve_pairwise_intersection(cs[i], cs[j])
        data[(i, j)] = {"dimension": hit.dimension, "points": len(hit.points)}
        ok = ok and hit.dimension <= 0
    return _verdict(ok), "pairwise curve intersections are finite point sets", data


def _undecided_max(what: str):
    def check():
        return UNDECIDED, f"{what} is not searched", {"reason": "out of scope"}

    return check


def _q_segments():
    found = strips.q_edges_from_strips(_strips())
    cube = strips.derive_cube_bicoloring(_strips())
    ok = len(found) == 12 and not cube.check() and all(len(v) == 1 for v in found.values())
    data = {"edges": len(found), "problems": cube.check()}
    return _verdict(ok), "transversal trapezoid/parallelogram pieces are the 12 edges of Q, once each", data


def _q_union():
    c = _census()
    q = {tuple(sorted(e.segment)) for e in strips.derive_cube_bicoloring(_strips()).edges}
    union = set(c["union"])
    data = {
        "union_segments": len(union),
        "q_edges_in_union": len(q & union),
        "by_role_and_kinds": {f"{r}:{k}": len(v) for (r, k), v in c["pieces"].items()},
    }
    ok = union == q
    return _verdict(ok), f"the union of pairwise strip intersections has {len(union)} segments, not only the 12 edges of Q", data


def _bicoloring():
    cube = strips.derive_cube_bicoloring(_strips())
    cmp = strips.compare_with_printed_q(cube)
    printed_problems = strips.printed_q_as_cube().check()
    mismatches = [r for r in cmp["rows"] if not r["agrees"]]
    data = {
        "agree_subscript_is_trapezoid": cmp["agree_subscript_is_trapezoid"],
        "agree_swapped": cmp["agree_swapped"],
        "mismatches": mismatches,
        "printed_table_problems": printed_problems,
    }
    if not mismatches:
        return CONFIRMED, "printed bicoloring agrees with geometry", data
    return CORRECTED, f"{len(mismatches)} of 12 printed entries differ from the geometric bicoloring", data


def _top_front():
    cube = strips.derive_cube_bicoloring(_strips())
    seg = strips.PRINTED_Q[0][0]
    e = cube.by_segment()[seg]
    ok = (e.trapezoid_color, e.parallelogram_color) == (2, 3)
    return _verdict(ok), "top-front edge: trapezoid of M2, parallelogram of M3", {
        "trapezoid": e.trapezoid_color,
        "parallelogram": e.parallelogram_color,
    }


# --- knots ----------------------------------------------------------------------------

TREFOIL = knots.LaurentPolynomial({4: -1, 3: 1, 1: 1})


def _trefoil():
    data = {}
    ok = True
    for i, c in _curves().items():
        rows = []
        for d in knots.accepted_directions(c.vertices, 3):
            diag = knots.projection_along(c.vertices, d)
            j = knots.jones_polynomial(diag)
            rows.append({"direction": d, "determinant": knots.knot_determinant(diag),
                         "jones": j.to_string("t"), "writhe": diag.writhe, "crossings": len(diag.crossings)})
            ok = ok and j == TREFOIL and knots.knot_determinant(diag) == 3 and knots.is_chiral_jones(j)
        ok = ok and len(rows) == 3
        data[i] = rows
    return _verdict(ok), "every curve is a right-handed trefoil: determinant 3, Jones -t^4+t^3+t", data


def _mirror():
    data = {}
    ok = True
    for i, c in _curves().items():
        m = knots.transform_curve(REFLECT_X3, c.vertices)
        j = knots.jones_polynomial(knots.generic_projection(m))
        data[i] = j.to_string("t")
        ok = ok and j == TREFOIL.mirror()
    return _verdict(ok), "mirrored curves carry the exponent-negated polynomial", data


# --- symmetry -------------------------------------------------------------------------


def _order():
    r = _compound_report()
    data = {k: r[k] for k in ("order", "printed_order", "rotations_only", "printed_generators_span",
                               "quarter_turns_span", "half_turns_and_FO_span")}
    data["F_O_in_G"] = r["members"]["F_O"]
    ok = r["order"] == 8 and r["printed_generators_span"] == 8
    return _verdict(ok), f"the compound stabilizer has order {r['order']} (all rotations); F_O is not in it", data


def _fo_images():
    rep = strips.compound_reflection_check(_strips())["F_O"]
    ok = rep["maps_i_to_5_minus_i"]
    return _verdict(ok), "F_O sends the compound to its mirror image, not strip to strip", rep


def _quarter_turns():
    r = _compound_report()
    kept = {k: r["members"][k] for k in ("R_d", "R_v", "R_h")}
    ok = not any(kept.values())
    return _verdict(ok), "the quarter turns preserve the compound", {
        "members": kept, "permutations": {k: r["permutations"][k] for k in kept}}


def _plane_reflections():
    G = symmetry.compound_group()
    shape = symmetry.compound_shape()
    other = {shape.key(g) for g in (REFLECT_X1, REFLECT_X2, REFLECT_X3)}
    data = {"in_G": [g in G for g in (REFLECT_X1, REFLECT_X2, REFLECT_X3)], "images": len(other)}
    ok = not any(data["in_G"]) and len(other) == 1 and shape.key() not in other
    return _verdict(ok), "coordinate-plane reflections move the compound to a single mirror compound", data


def _two_compounds():
    rep = symmetry.mirror_compound_images()
    ok = rep["compounds_in_orbit"] == 2 and rep["outside_G"] == rep["to_other_compound"]
    return _verdict(ok), "the 48 isometries produce exactly two compounds", rep


def _half_turns():
    corners = [lattice_point(c) for c in ("".join(d) for d in itertools.product("03", repeat=3))]
    three = Fraction(3)
    rules = {
        "R_d^2": (R_D2, lambda p: (three - p[0], three - p[1], p[2])),
        "R_v^2": (R_V2, lambda p: (three - p[0], p[1], three - p[2])),
        "R_h^2": (R_H2, lambda p: (p[0], three - p[1], three - p[2])),
    }
    data = {}
    for name, (g, rule) in rules.items():
        data[name] = all(tuple(apply_isometry(g, p)) == rule(p) for p in corners)
    return _verdict(all(data.values())), "half-turns act on the corners as printed", data


def _strip_permutations():
    got = {k: _compound_report()["permutations"][k] for k in ("R_d^2", "R_v^2", "R_h^2")}
    want = {"R_d^2": "(1 3)(2 4)", "R_v^2": "(1 2)(3 4)", "R_h^2": "(1 4)(2 3)"}
    return _verdict(got == want), "half-turns permute the strips as printed", {"computed": got, "printed": want}


def _obs4_equality():
    G = symmetry.compound_group()
    GT = symmetry.stabilizer(symmetry.triangle_compound_shape())
    sg, tg = symmetry.strip_groups(), symmetry.triangle_groups()
    data = {"union": G.elements == GT.elements, "each": {i: sg[i].elements == tg[i].elements for i in sg}}
    ok = data["union"] and all(data["each"].values())
    return _verdict(ok), "strip and triangle stabilizers coincide, for the unions and for each i", data


def _obs4_dihedral():
    tg = symmetry.triangle_groups()
    data = {i: {"order": g.order, "dihedral": g.is_dihedral()} for i, g in tg.items()}
    ok = all(v["order"] == 6 and v["dihedral"] for v in data.values())
    return _verdict(ok), "each triangle stabilizer is dihedral of order 6", data


def _cor5():
    data = symmetry.subgroup_intersections()
    ok = all(v == 1 for v in data["G_cap_G_i"].values()) and all(v == 1 for v in data["G_i_cap_G_j"].values())
    return _verdict(ok), "intersections have orders 6 (with G) and 2 (pairwise), not 1", data


def _homomorphism():
    G = symmetry.compound_group()
    return _verdict(symmetry.is_homomorphism_on(G)), "induced strip permutation is a homomorphism on G", {}


def _labeling_check():
    _, changes = _labeling()
    if not changes:
        return CONFIRMED, "corner labels follow the binary rule", {}
    return CORRECTED, "duplicate corner label repaired by the binary rule", {"changes": changes}


def _rotations():
    rep = symmetry.verify_rotation_display(_labeling()[0])
    ok = all(all(v.values()) for v in rep.values())
    return _verdict(ok), "printed 3-cycle rotations are realized, mutually inverse, about the triangle normals", rep


def _reflection_identities():
    rep = _reflections()
    keys = ("realized", "involution", "in_stab_T_i", "in_stab_M_i")
    ok = (
        all(all(e[k] for k in keys) for e in rep["entries"].values())
        and all(rep["equalities"].values())
        and rep["distinct"] == 6
    )
    data = {"equalities": rep["equalities"], "distinct": rep["distinct"],
            "all_rotations": all(e["rotation"] for e in rep["entries"].values())}
    return _verdict(ok), "the twelve involutions lie in the stabilizers and satisfy the six equalities", data


def _bisectors():
    rep = _reflections()
    bad = {k: e["bisector_vertex"] for k, e in rep["entries"].items() if not e["is_bisector_half_turn"]}
    if not bad:
        return CONFIRMED, "each involution is the half-turn about its bisector", {}
    data = {"entries": [{"entry": f"F_{i},{j}", "fixes_vertex": f"B_{i},{v}"} for (i, j), v in sorted(bad.items())]}
    return CORRECTED, f"{len(bad)} involutions are attached to the wrong vertex", data


# --- polylink ---------------------------------------------------------------------------


def _vertices():
    tris = polylink.build_triangles()
    data = {i: tris[i].vertices == polylink.PRINTED_VERTICES[i] for i in tris}
    ok = all(data.values()) and all(t.is_equilateral() for t in tris.values())
    return _verdict(ok), "triangle vertices are the unit-segment centers, equilateral", data


def _holes():
    inner = polylink.build_inner_triangles()
    data = {i: inner[i].vertices == polylink.printed_hole_vertices(i) for i in inner}
    tokens = polylink.normalized_tokens()
    hol = polylink.hollow_triangles()
    ok = all(data.values()) and all(h.is_concentric_homothetic() for h in hol.values())
    if not ok:
        return REFUTED, "hole vertices differ from the construction", data
    if tokens:
        return CORRECTED, "hole vertices match after reading a decimal comma", {"matches": data, "normalized": tokens}
    return CONFIRMED, "hole vertices match", data


def _midpoints():
    data = {i: polylink.side_midpoints(i) == polylink.PRINTED_SIDE_MIDPOINTS[i] for i in range(1, 5)}
    return _verdict(all(data.values())), "side midpoints match", data


def _correspondence():
    corr = polylink.build_correspondence()
    diff = polylink.correspondence_diff(corr)
    ok = corr.is_bijection() and not diff
    return _verdict(ok), "side midpoints coincide with hole vertices as printed", {"diff": diff}


def _six_cycles():
    got = polylink.six_cycles()
    diffs = {i: polylink.six_cycle_diff(got[i], polylink.PRINTED_SIX_CYCLES[i]) for i in got}
    bad = {i: d for i, d in diffs.items() if d}
    if not bad:
        return CONFIRMED, "six-cycles match", {}
    return CORRECTED, f"{len(bad)} printed six-cycles carry a wrong label", {"diffs": bad}


def _cuboctahedron():
    rep = polylink.cuboctahedron_check()
    return _verdict(rep["is_cuboctahedron"]), "the 12 triangle vertices span a cuboctahedron", rep


def _linked():
    ln = polylink.linking_numbers()
    ok = all(v not in (None, 0) for v in ln.values())
    return _verdict(ok), "outer boundaries are pairwise linked", {"linking_numbers": ln}


# --- factorizations ---------------------------------------------------------------------


def _rainbow():
    res = fz.rainbow_factorization_from_bicoloring()
    f = _F()
    n = fz.rainbow_count(f)
    ok = f.is_valid() and n == 24 and res.factorization is not None
    return _verdict(ok), f"{n}/24 rainbow 4-cycles", {"reading": res.reading, "failures": list(res.failures)}


def _enumeration_check():
    fam = _enumeration()
    where = fz.membership(_F(), fam)
    plane_rule = sum(fz.classify_four_cycles(g).plane_rule_holds() for g in fam)
    ok = bool(fam) and where == "exact"
    return _verdict(ok), f"{len(fam)} rainbow factorizations; canonical F found", {
        "count": len(fam), "membership": where, "plane_rule": plane_rule}


def _parallel():
    p, f = _P(), _F()
    ok = p.is_valid() and p.colors != f.colors and fz.rainbow_count(p) == 0
    return _verdict(ok), "P is a 1-factorization distinct from F with no rainbow squares", {
        "rainbow": fz.rainbow_count(p)}


def _types():
    cls = fz.classify_four_cycles(_F())
    return _verdict(cls.plane_rule_holds()), "each type occupies its two printed plane families", {
        "by_plane": {pl: {fz.tag_name(t): n for t, n in c.items()} for pl, c in sorted(cls.by_plane.items())}}


def _counts():
    cls = fz.classify_four_cycles(_F())
    counts = {fz.tag_name(t): cls.counts.get(t, 0) for t in fz.TAGS}
    return _verdict(set(counts.values()) == {8}), "eight 4-cycles of each type", counts


def _cor8_torus():
    pairs = embeddings.q4_rainbow_pairs(_F())
    data = {f"{a}+{b}": r.as_dict() for (a, b), r in pairs.items()}
    ok = all(r.is_torus for r in pairs.values())
    return _verdict(ok), "any two types give a torus", data


def _families():
    rep = fz.rainbow_family_checks(_F())
    ok = rep["families"] == 6 and all(rep["latin"].values()) and all(
        v["two_factors"] > 0 and v["antipodal_subpaths"] for v in rep["doubled"].values())
    return _verdict(ok), "each plane family is Latin; doubled 8-cycles have antipodal subpaths", rep


def _two_factors():
    rep = fz.two_factor_report(_F())
    ok = all(v["lengths"] == [8, 8] and v["antipodal_subpaths"] and v["four_directions"] for v in rep.values())
    return _verdict(ok), "two colors of F form two 8-cycles with antipodal 4-subpaths in four directions", rep


def _twelve_check():
    subs = _twelve()
    data = [
        {"signature": s.signature(), "plane": s.plane, "surface": s.surface.as_dict(), "census": s.census(),
         "completions": s.completions}
        for s in subs
    ]
    ok = (
        len(subs) == 12
        and len({s.deleted for s in subs}) == 12
        and all(s.surface.is_torus and s.census() == {4: 4, 8: 4} for s in subs)
    )
    return _verdict(ok), "twelve edge-deleted subgraphs, each a torus with four 4-gons and four 8-gons", {"subgraphs": data}


def _quotient():
    lit = fz.quotient_by(fz.rho_plus_eight)
    q = fz.antipodal_quotient()
    data = {
        "literal_loops": lit.loops,
        "literal_edges": len(lit.graph.edges),
        "antipodal_is_k44": fz.is_k44(q.graph),
        "preimages_per_edge": sorted({len(v) for v in q.preimages.values()}),
        "parts": [list(fz.V0), list(fz.V1)],
    }
    if not data["antipodal_is_k44"]:
        return REFUTED, "antipodal quotient is not K4,4", data
    if fz.is_k44(lit.graph):
        return CONFIRMED, "quotient is K4,4", data
    return CORRECTED, "identifying l with l+8 gives loops; identifying antipodes gives K4,4", data


def _orthogonal():
    rep = _projection()
    ok = rep.orthogonal and rep.fstar.is_valid() and rep.pstar.is_valid()
    return _verdict(ok), "F* and P* are orthogonal 1-factorizations of K4,4", {"intersections": rep.intersections}


def _euler():
    rep = _projection()
    sq = fz.euler_square(rep.fstar, rep.pstar)
    diff = fz.euler_square_diff(sq)
    return _verdict(sq.is_graeco_latin() and not diff), "Euler square is Graeco-Latin and matches", {
        "csv": sq.as_csv(), "diff": diff}


def _aut_q4():
    n = _aut_counts()["aut_q4"]
    return _verdict(n == 384), f"|Aut(Q4)| = {n}", {"aut_q4": n}


def _color_preserving():
    c = _aut_counts()
    data = {k: c[k] for k in ("f_strict", "f_up_to_permutation", "p_strict", "p_up_to_permutation")}
    return _verdict(c["f_strict"] == 16), (
        f"F is preserved by {c['f_strict']} automorphisms; the parallel coloring by {c['p_strict']}"), data


def _quotient_group():
    c = _aut_counts()
    data = {k: c[k] for k in ("induced_on_quotient", "kernel", "aut_k44")}
    if c["aut_k44"] == 192:
        return CONFIRMED, "|Aut(K4,4)| = 192", data
    if c["induced_on_quotient"] == 192:
        return CORRECTED, "192 is the group induced by Aut(Q4); the full Aut(K4,4) has 1152 elements", data
    return REFUTED, "neither group has order 192", data


def _k44_tori():
    cs = _k44_complexes()
    data = {fz.tag_name(c.tag): {"surface": c.surface.as_dict() if c.surface else None,
                                 "projected": len(c.projected), "covers_found": c.covers_found}
            for c in cs}
    return _verdict(all(c.surface and c.surface.is_torus for c in cs)), "each type completes to a torus on K4,4", data


def _not_rainbow():
    rep = _projection()
    ok = not fz.is_q2_rainbow(rep.fstar)
    return _verdict(ok), f"{rep.fstar_rainbow_cycles} of 36 K4,4 4-cycles are rainbow under F*", {
        "rainbow": rep.fstar_rainbow_cycles, "cycles": 36}


def _pstar_two_colors():
    rep = _projection()
    two = sum(len(set(fz.cycle_colors(rep.pstar, c))) == 2 for c in fz.k44_four_cycles())
    return _verdict(two == 36), f"only {two} of 36 K4,4 4-cycles use two colors under P*", {
        "two_colored": two, "rainbow": rep.pstar_rainbow_cycles}


def _self_dual():
    f = _F()
    fstar = _projection().fstar
    reps = {"Q4:(1234)+(1324)": embeddings.dual_report(_cor8_complex(), f)}
    for c in _k44_complexes():
        if c.complex is not None:
            reps[f"K44:{fz.tag_name(c.tag)}"] = embeddings.dual_report(c.complex, fstar)
    data = {k: {"self_dually_rainbow": r.self_dually_rainbow, "dual_vertices": r.n_vertices} for k, r in reps.items()}
    return _verdict(all(r.self_dually_rainbow for r in reps.values())), "duals of the rainbow tori are rainbow 1-factorized", data


def _dual_involution():
    fcs = [_cor8_complex()] + [s.complex for s in _twelve()] + [c.complex for c in _k44_complexes() if c.complex]
    ok = all(embeddings.dual_of_dual_matches(fc) for fc in fcs)
    return _verdict(ok), "the dual of the dual reproduces each torus", {"complexes": len(fcs)}


# --- registry ---------------------------------------------------------------------------

REGISTRY: tuple[Claim, ...] = (
    Claim("EQ1.curve", "stated", "table for C1", lambda: _curve_check(1)),
    Claim("EQ2.curve", "stated", "table for C2", lambda: _curve_check(2)),
    Claim("EQ3.curve", "stated", "table for C3", lambda: _curve_check(3)),
    Claim("EQ4.curve", "stated", "table for C4", lambda: _curve_check(4)),
    Claim("REM18.length", "stated", "length of C_i is 24", _curve_length),
    Claim("REM18.area", "stated", "area of M_i is 12 sqrt 2", _strip_area),
    Claim("THM1.area", "stated", "faces of maximal area", _face_area),
    Claim("THM1.strip", "stated", "M_i is an embedded Mobius strip bounded by C_i", _strip_topology),
    Claim("THM1.maximality", "stated", "area and segment-count extremality", _undecided_max("extremality")),
    Claim("THM2.faces", "stated", "trapezoids and parallelograms alternate", _faces_alternate),
    Claim("THM2.curve_intersections", "stated", "boundaries meet in points", _curve_intersections),
    Claim("THM2.maximum", "stated", "four is the maximum number of strips", _undecided_max("maximality of four")),
    Claim("EQ5.segments", "stated", "strip intersections give the edges of Q", _q_segments),
    Claim("EQ5.union", "stated", "the strips meet exactly along the edges of Q", _q_union),
    Claim("EQ5.bicoloring", "stated", "edge bicoloring of Q", _bicoloring),
    Claim("EQ5.top_front", "stated", "top-front edge labeled 23", _top_front),
    Claim("KNOT.trefoil", "stated", "each C_i is a trefoil", _trefoil),
    Claim("KNOT.mirror", "stated", "mirror compound is enantiomorphic", _mirror),
    Claim("TEXT.FO_5_minus_i", "stated", "F_O maps M_i to M_{5-i}", _fo_images),
    Claim("EQ6.half_turns", "stated", "half-turn corner transpositions", _half_turns),
    Claim("EQ7.permutations", "stated", "half-turn strip permutations", _strip_permutations),
    Claim("TEXT.plane_reflections", "stated", "plane reflections give the mirror compound", _plane_reflections),
    Claim("TEXT.quarter_turns", "stated", "quarter turns do not preserve the compound", _quarter_turns),
    Claim("TEXT.two_compounds", "stated", "exactly two compounds", _two_compounds),
    Claim("OBS3.order", "stated", "|G| = 8, generated by F_O and quarter turns", _order),
    Claim("EQ8.vertices", "stated", "triangle vertices", _vertices),
    Claim("EQ9.holes", "stated", "hole vertices", _holes),
    Claim("EQ10.midpoints", "stated", "side midpoints", _midpoints),
    Claim("EQ11.correspondence", "stated", "midpoint / hole correspondence", _correspondence),
    Claim("EQ12.six_cycles", "stated", "alternating six-cycles", _six_cycles),
    Claim("POLY.cuboctahedron", "stated", "vertices of a cuboctahedron", _cuboctahedron),
    Claim("POLY.linked", "stated", "the triangles are locked", _linked),
    Claim("OBS4.equality", "stated", "Aut(M) = Aut(T)", _obs4_equality),
    Claim("OBS4.dihedral", "stated", "each G_i dihedral of order 6", _obs4_dihedral),
    Claim("EQ13.labeling", "stated", "corner labeling", _labeling_check),
    Claim("EQ14.rotations", "stated", "order-3 rotations", _rotations),
    Claim("REFL.identities", "stated", "bisector involutions and their equalities", _reflection_identities),
    Claim("REFL.bisectors", "stated", "involution attached to each vertex", _bisectors),
    Claim("COR5.intersections", "stated", "trivial subgroup intersections", _cor5),
    Claim("THM6.rainbow", "stated", "F is Q2-rainbow", _rainbow),
    Claim("THM6.enumeration", "stated", "rainbow factorizations exist", _enumeration_check),
    Claim("REM7.parallel", "stated", "F differs from P", _parallel),
    Claim("EQ15.types", "stated", "types by plane", _types),
    Claim("COR8.counts", "stated", "eight 4-cycles per type", _counts),
    Claim("COR8.torus", "stated", "two types give a torus", _cor8_torus),
    Claim("OBS9.families", "stated", "plane families", _families),
    Claim("OBS10.two_factors", "stated", "2-factors of F", _two_factors),
    Claim("COR11.twelve", "stated", "twelve toroidal subgraphs", _twelve_check),
    Claim("PROP12.quotient", "stated", "antipodal quotient is K4,4", _quotient),
    Claim("PROP13.orthogonal", "stated", "F* orthogonal to P*", _orthogonal),
    Claim("PROP13.euler", "stated", "Euler square", _euler),
    Claim("TEXT.pstar_two_colors", "stated", "P* uses two colors on each 4-cycle", _pstar_two_colors),
    Claim("AUT.q4", "stated", "|Aut(Q4)| = 384", _aut_q4),
    Claim("AUT.color_preserving", "stated", "16 color-preserving automorphisms", _color_preserving),
    Claim("OBS14.quotient_group", "stated", "192 automorphisms of K4,4", _quotient_group),
    Claim("COR15.tori", "stated", "K4,4 tori per type", _k44_tori),
    Claim("COR15.not_rainbow", "stated", "F* not Q2-rainbow", _not_rainbow),
    Claim("REM16.self_dual", "stated", "self-dually rainbow", _self_dual),
    Claim("INT.mesh_diagonal_independence", "internal", "triangulation independence", _mesh_diagonals),
    Claim("INT.stabilizer_homomorphism", "internal", "strip permutation homomorphism", _homomorphism),
    Claim("INT.dual_involution", "internal", "dual of dual", _dual_involution),
)

CLAIM_IDS = tuple(c.claim_id for c in REGISTRY)
_BY_ID = {c.claim_id: c for c in REGISTRY}


def workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def select(ids) -> list[Claim]:
    """Claims for ``ids`` in registry order; ``None`` or ``["all"]`` selects everything."""
    if ids is None or list(ids) == ["all"]:
        return list(REGISTRY)
    unknown = [i for i in ids if i not in _BY_ID]
    if unknown:
        raise KeyError(unknown[0])
    wanted = set(ids)
    return [c for c in REGISTRY if c.claim_id in wanted]


def run_claims(ids=None, n_workers: int | None = None) -> list[ClaimReport]:
    chosen = select(ids)
    n = n_workers or workers()
    if n == 1:
        return [c.run() for c in chosen]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return list(pool.map(Claim.run, chosen))


def run_failed(reports) -> bool:
    return any(r.kind == "internal" and r.verdict == REFUTED for r in reports)
