"""Symmetries of the strip compound inside the 48 isometries of the cube.

Shapes are compared as finite unions of convex polygons.  Since an
isometry carries faces to faces, comparing the sets of face vertex sets
is exact; tests cross-check this by point containment.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .exactgeom import (
    CENTER,
    F_O,
    IDENTITY,
    R_D,
    R_D2,
    R_H,
    R_H2,
    R_V,
    R_V2,
    CubeIsometry,
    P,
    RationalPoint3,
    all_isometries,
    apply_isometry,
    lattice_point,
)
from .polylink import build_triangles
from .strips import StripFaceSet, all_strips

# --- groups ------------------------------------------------------------------


@dataclass(frozen=True)
class IsometryGroup:
    elements: frozenset

    def __post_init__(self):
        if IDENTITY not in self.elements:
            raise ValueError("a group contains the identity")
        for a in self.elements:
            if a.inverse() not in self.elements:
                raise ValueError("not closed under inverses")
            for b in self.elements:
                if a @ b not in self.elements:
                    raise ValueError("not closed under composition")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, g) -> bool:
        return g in self.elements

    def __and__(self, other: "IsometryGroup") -> "IsometryGroup":
        return IsometryGroup(self.elements & other.elements)

    def sorted(self) -> list[CubeIsometry]:
        return sorted(self.elements)

    def is_abelian(self) -> bool:
        return all(a @ b == b @ a for a in self.elements for b in self.elements)

    def is_dihedral(self) -> bool:
        """Dihedral of order 2n (n >= 3): a cyclic index-2 subgroup, involutions outside it."""
        n2 = self.order
        if n2 < 6 or n2 % 2:
            return False
        n = n2 // 2
        for g in self.elements:
            if g.order() == n:
                cyc = set(_powers(g))
                return all(h.order() == 2 for h in self.elements - cyc)
        return False

    def rotations_only(self) -> bool:
        return all(g.is_rotation() for g in self.elements)

    def order_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for g in self.elements:
            census[g.order()] = census.get(g.order(), 0) + 1
        return dict(sorted(census.items()))

    def generators(self) -> list[CubeIsometry]:
        """A greedy generating set, scanning elements in matrix order."""
        gens: list[CubeIsometry] = []
        span = {IDENTITY}
        for g in self.sorted():
            if g not in span:
                gens.append(g)
                span = set(generated(gens).elements)
        return gens

    def as_json(self) -> list:
        return [[list(r) for r in g.matrix] for g in self.sorted()]


def _powers(g: CubeIsometry) -> list[CubeIsometry]:
    out, h = [IDENTITY], g
    while h != IDENTITY:
        out.append(h)
        h = g @ h
    return out


def generated(gens: Iterable[CubeIsometry]) -> IsometryGroup:
    elems = {IDENTITY}
    frontier = list(elems)
    gens = list(gens)
    while frontier:
        new = []
        for a in frontier:
            for g in gens:
                b = g @ a
                if b not in elems:
                    elems.add(b)
                    new.append(b)
        frontier = new
    return IsometryGroup(frozenset(elems))


# --- shapes --------------------------------------------------------------------


@dataclass(frozen=True)
class PolygonSet:
    """Finite union of convex polygons, each given by its vertex tuple."""

    polygons: tuple

    def key(self, iso: CubeIsometry = IDENTITY) -> frozenset:
        return frozenset(frozenset(apply_isometry(iso, p) for p in poly) for poly in self.polygons)

    def image(self, iso: CubeIsometry) -> "PolygonSet":
        return PolygonSet(tuple(tuple(apply_isometry(iso, p) for p in poly) for poly in self.polygons))

    def __or__(self, other: "PolygonSet") -> "PolygonSet":
        return PolygonSet(self.polygons + other.polygons)


def strip_shape(f: StripFaceSet) -> PolygonSet:
    return PolygonSet(tuple(q.vertices for q in f.faces))


def compound_shape(strips: dict[int, StripFaceSet] | None = None) -> PolygonSet:
    strips = strips or all_strips()
    out = PolygonSet(())
    for i in sorted(strips):
        out = out | strip_shape(strips[i])
    return out


def triangle_shape(i: int) -> PolygonSet:
    return PolygonSet((build_triangles()[i].vertices,))


def triangle_compound_shape() -> PolygonSet:
    tris = build_triangles()
    return PolygonSet(tuple(tris[i].vertices for i in sorted(tris)))


def cube_surface_shape() -> PolygonSet:
    faces = []
    for axis in range(3):
        for level in ("0", "3"):
            corners = []
            for a, b in ((0, 0), (3, 0), (3, 3), (0, 3)):
                digits = [None, None, None]
                digits[axis] = level
                others = [k for k in range(3) if k != axis]
                digits[others[0]], digits[others[1]] = str(a), str(b)
                corners.append(lattice_point("".join(digits)))
            faces.append(tuple(corners))
    return PolygonSet(tuple(faces))


def stabilizer(shape: PolygonSet) -> IsometryGroup:
    """All cube isometries mapping the shape onto itself (exhaustive over 48)."""
    base = shape.key()
    return IsometryGroup(frozenset(g for g in all_isometries() if shape.key(g) == base))


def compound_group() -> IsometryGroup:
    return stabilizer(compound_shape())


def strip_groups() -> dict[int, IsometryGroup]:
    strips = all_strips()
    return {i: stabilizer(strip_shape(f)) for i, f in strips.items()}


def triangle_groups() -> dict[int, IsometryGroup]:
    return {i: stabilizer(triangle_shape(i)) for i in range(1, 5)}


def induced_strip_permutation(
    iso: CubeIsometry, strips: dict[int, StripFaceSet] | None = None
) -> tuple[int, ...] | None:
    """``sigma`` with ``iso(M_i) = M_sigma(i)``, as the tuple (sigma(1), ..., sigma(4))."""
    strips = strips or all_strips()
    keys = {strip_shape(s).key(): i for i, s in strips.items()}
    images = [keys.get(strip_shape(strips[i]).key(iso)) for i in sorted(strips)]
    if None in images:
        return None
    return tuple(images)


def permutation_cycles(perm: Sequence[int], offset: int = 1) -> str:
    """Cycle notation of a tuple permutation with values starting at ``offset``."""
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        k = perm[start] - offset
        while k != start:
            cyc.append(k)
            seen.add(k)
            k = perm[k] - offset
        if len(cyc) > 1:
            parts.append("(" + " ".join(str(c + offset) for c in cyc) + ")")
    return "".join(parts) or "()"


def mirror_compound_images() -> dict:
    """For every isometry outside ``G``: is the image the mirror compound?"""
    shape = compound_shape()
    base = shape.key()
    G = compound_group()
    keys = {shape.key(g) for g in all_isometries()}
    others = keys - {base}
    report = {"compounds_in_orbit": len(keys), "outside_G": 0, "to_other_compound": 0}
    for g in all_isometries():
        if g in G:
            continue
        report["outside_G"] += 1
        report["to_other_compound"] += shape.key(g) in others
    return report


def compound_report() -> dict:
    G = compound_group()
    GT = stabilizer(triangle_compound_shape())
    named = {"F_O": F_O, "R_d": R_D, "R_v": R_V, "R_h": R_H, "R_d^2": R_D2, "R_v^2": R_V2, "R_h^2": R_H2}
    strips = all_strips()
    printed_gens = generated([F_O, R_D, R_V, R_H])
    return {
        "order": G.order,
        "printed_order": 8,
        "rotations_only": G.rotations_only(),
        "equals_triangle_compound_group": G.elements == GT.elements,
        "generators": [g.matrix for g in G.generators()],
        "members": {name: (g in G) for name, g in named.items()},
        "permutations": {
            name: (None if (p := induced_strip_permutation(g, strips)) is None else permutation_cycles(p))
            for name, g in named.items()
        },
        "printed_generators_span": printed_gens.order,
        "quarter_turns_span": generated([R_D, R_V, R_H]).order,
        "half_turns_and_FO_span": generated([F_O, R_D2, R_V2, R_H2]).order,
    }


def is_homomorphism_on(G: IsometryGroup) -> bool:
    strips = all_strips()
    perm = {g: induced_strip_permutation(g, strips) for g in G.elements}
    if any(p is None for p in perm.values()):
        return False
    for a, b in itertools.product(G.elements, repeat=2):
        pa, pb, pab = perm[a], perm[b], perm[a @ b]
        if pab != tuple(pa[pb[k] - 1] for k in range(4)):
            return False
    return True


def subgroup_intersections() -> dict:
    G = compound_group()
    Gi = strip_groups()
    return {
        "G": G.order,
        "G_i": {i: g.order for i, g in Gi.items()},
        "G_cap_G_i": {i: (G & g).order for i, g in Gi.items()},
        "G_i_cap_G_j": {(i, j): (Gi[i] & Gi[j]).order for i, j in itertools.combinations(sorted(Gi), 2)},
        "G_i_cap_G_i": {i: (g & g).order for i, g in Gi.items()},
    }


# --- corner labeling -----------------------------------------------------------

PRINTED_LABELS = {0: "000", 1: "300", 2: "030", 3: "330", 4: "003", 5: "303", 6: "033", 7: "033"}


@dataclass(frozen=True)
class VertexLabeling:
    corners: tuple  # corners[label] = RationalPoint3

    def __post_init__(self):
        if len(set(self.corners)) != 8:
            raise ValueError("labeling is not a bijection onto the cube corners")

    def label_of(self, p: RationalPoint3) -> int:
        return self.corners.index(p)

    def permutation(self, iso: CubeIsometry) -> tuple[int, ...]:
        return tuple(self.label_of(apply_isometry(iso, c)) for c in self.corners)

    def isometry_of(self, perm: Sequence[int]) -> CubeIsometry | None:
        for g in all_isometries():
            if self.permutation(g) == tuple(perm):
                return g
        return None


def binary_label(corner: str) -> int:
    """``x1 + 2 x2 + 4 x3`` with coordinate 3 read as bit 1."""
    return sum((1 << k) for k, c in enumerate(corner) if c == "3")


def correct_labeling(printed: dict[int, str] | None = None) -> tuple[VertexLabeling, list[dict]]:
    """Repair duplicate corners: labels off the binary rule take the missing corners."""
    printed = printed or PRINTED_LABELS
    values = list(printed.values())
    dup = {c for c in values if values.count(c) > 1}
    missing = sorted({"".join(d) for d in itertools.product("03", repeat=3)} - set(values))
    fixed = dict(printed)
    changes = []
    suspects = [k for k, c in sorted(printed.items()) if c in dup and binary_label(c) != k]
    if len(suspects) != len(missing):
        raise ValueError("labeling repair is not forced")
    for k, corner in zip(suspects, missing):
        if binary_label(corner) != k:
            raise ValueError("labeling repair disagrees with the binary rule")
        changes.append({"label": k, "printed": printed[k], "corrected": corner})
        fixed[k] = corner
    return VertexLabeling(tuple(lattice_point(fixed[k]) for k in range(8))), changes


def parse_cycles(text: str, n: int = 8) -> tuple[int, ...]:
    """``"(124)(365)"`` -> permutation tuple on ``0..n-1``."""
    perm = list(range(n))
    for grp in re.findall(r"\(([0-9 ]+)\)", text):
        digits = [int(c) for c in grp.replace(" ", "")]
        for a, b in zip(digits, digits[1:] + digits[:1]):
            perm[a] = b
    return tuple(perm)


def inverse_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    inv = [0] * len(perm)
    for a, b in enumerate(perm):
        inv[b] = a
    return tuple(inv)


PRINTED_ROTATIONS = {
    1: ("(124)(365)", "(142)(563)"),
    2: ("(036)(174)", "(063)(147)"),
    3: ("(065)(271)", "(056)(217)"),
    4: ("(247)(053)", "(274)(035)"),
}

PRINTED_AXES = {
    1: (P(0.5, 0.5, 0.5), P(2.5, 2.5, 2.5)),
    2: (P(0.5, 2.5, 0.5), P(2.5, 0.5, 2.5)),
    3: (P(0.5, 0.5, 2.5), P(2.5, 2.5, 0.5)),
    4: (P(2.5, 0.5, 0.5), P(0.5, 2.5, 2.5)),
}


def _turns_about(a: RationalPoint3, b: RationalPoint3) -> list[CubeIsometry]:
    """Non-identity rotations fixing both points (through O, so fixing the line)."""
    return [
        g
        for g in all_isometries()
        if g.is_rotation() and g != IDENTITY and apply_isometry(g, a) == a and apply_isometry(g, b) == b
    ]


def verify_rotation_display(labeling: VertexLabeling | None = None) -> dict:
    labeling = labeling or correct_labeling()[0]
    groups = strip_groups()
    tris = build_triangles()
    out = {}
    for i, (fwd, back) in PRINTED_ROTATIONS.items():
        a, b = PRINTED_AXES[i]
        turns = _turns_about(a, b)
        perms = {labeling.permutation(g): g for g in turns if g.order() == 3}
        pf, pb = parse_cycles(fwd), parse_cycles(back)
        axis = b - a
        out[i] = {
            "forward_realized": pf in perms,
            "inverse_realized": pb in perms,
            "mutually_inverse": inverse_permutation(pf) == pb,
            "in_G_i": all(perms[p] in groups[i] for p in (pf, pb) if p in perms),
            "axis_is_triangle_normal": axis.cross(tris[i].normal()).is_zero(),
        }
    return out


PRINTED_REFLECTIONS = {
    (1, 1): "(07)(16)(23)(45)",
    (1, 2): "(07)(13)(25)(46)",
    (1, 3): "(07)(15)(26)(34)",
    (2, 1): "(01)(25)(34)(67)",
    (2, 2): "(07)(13)(25)(46)",
    (2, 3): "(04)(16)(25)(37)",
    (3, 1): "(07)(15)(26)(34)",
    (3, 2): "(02)(16)(34)(57)",
    (3, 3): "(01)(25)(34)(67)",
    (4, 1): "(07)(16)(23)(45)",
    (4, 2): "(02)(16)(34)(57)",
    (4, 3): "(04)(16)(25)(37)",
}

PRINTED_REFLECTION_EQUALITIES = (
    ((1, 1), (4, 1)),
    ((1, 2), (2, 2)),
    ((1, 3), (3, 1)),
    ((2, 1), (3, 3)),
    ((2, 3), (4, 3)),
    ((3, 2), (4, 2)),
)


def bisector_half_turn(i: int, j: int) -> CubeIsometry:
    """Half-turn about the line through ``O`` and vertex ``B_{i,j}``."""
    b = build_triangles()[i].vertices[j - 1]
    for g in _turns_about(CENTER, b):
        if g.order() == 2:
            return g
    raise ValueError(f"no half-turn about O B_{i},{j}")


def verify_reflection_identities(labeling: VertexLabeling | None = None) -> dict:
    labeling = labeling or correct_labeling()[0]
    strip_g = strip_groups()
    tri_g = triangle_groups()
    entries = {}
    for (i, j), text in PRINTED_REFLECTIONS.items():
        perm = parse_cycles(text)
        g = labeling.isometry_of(perm)
        entries[(i, j)] = {
            "realized": g is not None,
            "involution": g is not None and g.order() == 2,
            "rotation": g is not None and g.is_rotation(),
            "is_bisector_half_turn": g is not None and g == bisector_half_turn(i, j),
            "bisector_vertex": next((k for k in (1, 2, 3) if g == bisector_half_turn(i, k)), None),
            "in_stab_T_i": g is not None and g in tri_g[i],
            "in_stab_M_i": g is not None and g in strip_g[i],
        }
    equalities = {
        f"F_{a[0]},{a[1]}=F_{b[0]},{b[1]}": parse_cycles(PRINTED_REFLECTIONS[a]) == parse_cycles(PRINTED_REFLECTIONS[b])
        for a, b in PRINTED_REFLECTION_EQUALITIES
    }
    distinct = {parse_cycles(t) for t in PRINTED_REFLECTIONS.values()}
    return {"entries": entries, "equalities": equalities, "distinct": len(distinct)}
