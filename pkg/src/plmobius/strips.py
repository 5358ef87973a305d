"""The four PL Möbius strips M1..M4 and the cube Q of their intersections.

Strip ``i`` has six planar faces; face ``k`` is spanned by segments ``k`` and
``k+6`` of the curve ``C_i`` together with two legs of squared length 3.
Odd faces are isosceles trapezoids, even faces parallelograms.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .curves import PLCycle, all_canonical_curves
from .exactgeom import (
    CubeIsometry,
    F_O,
    IDENTITY,
    PlanarQuad,
    R_D2,
    R_H2,
    R_V2,
    RationalPoint3,
    Segment3,
    P,
    all_isometries,
    apply_isometry,
    clip_to_box,
    coplanar,
    meets_open_box,
    midpoint,
    quad_area_squared,
    quad_quad_intersection,
)
from .surfaces import FaceComplex, SurfaceReport, boundary_edges, orientation_signs, verify_surface

HALF = Fraction(1, 2)
FIVE_HALVES = Fraction(5, 2)


@dataclass(frozen=True)
class StripFaceSet:
    owner: int
    curve: PLCycle
    faces: tuple[PlanarQuad, ...]

    def legs(self) -> list[tuple[RationalPoint3, RationalPoint3]]:
        v = self.curve.vertices
        return [(v[k], v[k + 6]) for k in range(6)]

    def key(self) -> frozenset:
        """Point-set identity: the six maximal planar pieces."""
        return frozenset(f.key() for f in self.faces)

    def image_key(self, iso: CubeIsometry) -> frozenset:
        return frozenset(
            frozenset(apply_isometry(iso, p) for p in f.vertices) for f in self.faces
        )


def build_faces(i: int, curve: PLCycle | None = None) -> StripFaceSet:
    c = curve or all_canonical_curves()[i]
    v = c.vertices
    if len(v) != 12:
        raise ValueError("strip construction needs a 12-segment curve")
    faces = []
    for k in range(6):
        quad = (v[k], v[k + 1], v[(k + 7) % 12], v[k + 6])
        if not coplanar(quad):
            raise ValueError(f"face {k + 1} of M{i} is not planar; curve is corrupt")
        faces.append(PlanarQuad(quad, "trapezoid" if k % 2 == 0 else "parallelogram"))
    for k in range(6):
        leg = (v[k], v[k + 6])
        if (leg[1] - leg[0]).norm2() != 3:
            raise ValueError(f"leg {k + 1} of M{i} does not have squared length 3")
    return StripFaceSet(i, c, tuple(faces))


def all_strips() -> dict[int, StripFaceSet]:
    curves = all_canonical_curves()
    return {i: build_faces(i, curves[i]) for i in curves}


@dataclass(frozen=True)
class StripMesh:
    owner: int
    vertices: tuple[RationalPoint3, ...]
    triangles: tuple[tuple[int, int, int], ...]
    boundary: PLCycle

    def complex(self) -> FaceComplex:
        return FaceComplex.from_vertex_walks(self.triangles)

    def edges(self) -> set[tuple[int, int]]:
        return {e for f in self.complex().faces for e in f.edges}

    def surface(self) -> SurfaceReport:
        return verify_surface(self.complex())

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges()) + len(self.triangles)

    def is_orientable(self) -> bool:
        return orientation_signs(self.complex()) is not None

    def boundary_point_set_matches(self) -> bool:
        """Boundary edges of the mesh are exactly the curve's segments."""
        bnd = {frozenset((self.vertices[a], self.vertices[b])) for a, b in boundary_edges(self.complex())}
        return bnd == {s.key() for s in self.boundary.segments}


def build_mesh(f: StripFaceSet, diagonal: str = "low") -> StripMesh:
    """Split each face into two triangles.

    ``diagonal="low"`` cuts from the face vertex with the lowest index in the
    curve's vertex list; ``"high"`` uses the other diagonal.
    """
    if diagonal not in ("low", "high"):
        raise ValueError("diagonal must be 'low' or 'high'")
    v = f.curve.vertices
    index = {p: n for n, p in enumerate(v)}
    tris = []
    for q in f.faces:
        ids = [index[p] for p in q.vertices]
        start = ids.index(min(ids))
        if diagonal == "high":
            start = (start + 1) % 4
        a, b, c, d = (ids[(start + r) % 4] for r in range(4))
        tris.append((a, b, c))
        tris.append((a, c, d))
    return StripMesh(f.owner, v, tuple(tris), f.curve)


@dataclass(frozen=True)
class SurdSum:
    """Exact sum of square roots, ``sum coeff * sqrt(radicand)``."""

    terms: tuple[tuple[int, Fraction], ...]  # (squarefree radicand, coefficient)

    @classmethod
    def sqrt_of(cls, value: Fraction) -> "SurdSum":
        value = Fraction(value)
        if value < 0:
            raise ValueError("negative radicand")
        # sqrt(n/d) = sqrt(n*d)/d
        n = value.numerator * value.denominator
        outside, inside = 1, 1
        k = 2
        while k * k <= n:
            while n % (k * k) == 0:
                outside *= k
                n //= k * k
            k += 1
        inside = n
        return cls(((inside, Fraction(outside, value.denominator)),))

    def __add__(self, other: "SurdSum") -> "SurdSum":
        acc: dict[int, Fraction] = dict(self.terms)
        for r, c in other.terms:
            acc[r] = acc.get(r, Fraction(0)) + c
        return SurdSum(tuple(sorted((r, c) for r, c in acc.items() if c)))

    def __str__(self):
        parts = []
        for r, c in self.terms:
            coef = str(c) if c != 1 or r == 1 else ""
            parts.append(coef if r == 1 else f"{coef}√{r}")
        return " + ".join(parts) or "0"

    def approx(self) -> float:
        return float(sum(float(c) * math.sqrt(r) for r, c in self.terms))


def strip_area(f: StripFaceSet) -> SurdSum:
    total = SurdSum(())
    for q in f.faces:
        total = total + SurdSum.sqrt_of(quad_area_squared(q))
    return total


def is_isosceles(q: PlanarQuad) -> bool:
    a, b, c, d = q.vertices
    return (b - c).norm2() == (d - a).norm2()


@dataclass(frozen=True)
class EmbeddingReport:
    inside_cube: bool
    avoids_inner_cube: bool
    adjacent_share_leg: bool
    others_disjoint: bool

    @property
    def ok(self) -> bool:
        return self.inside_cube and self.avoids_inner_cube and self.adjacent_share_leg and self.others_disjoint


def embedding_report(f: StripFaceSet) -> EmbeddingReport:
    """Placement in the shell ``[0,3]^3 minus (1,2)^3`` and absence of self-contact."""
    inside = all(0 <= c <= 3 for q in f.faces for p in q.vertices for c in p)
    avoids = not any(meets_open_box(q.vertices, 1, 2) for q in f.faces)
    legs = {frozenset(leg) for leg in f.legs()}
    adjacent_ok = True
    disjoint = True
    n = len(f.faces)
    for a, b in itertools.combinations(range(n), 2):
        hit = quad_quad_intersection(f.faces[a], f.faces[b])
        if (b - a) % n in (1, n - 1):
            adjacent_ok = adjacent_ok and hit.kind == "segment" and frozenset(hit.points) in legs
        else:
            disjoint = disjoint and hit.kind == "empty"
    return EmbeddingReport(inside, avoids, adjacent_ok, disjoint)


def mid_segment(q: PlanarQuad) -> tuple[RationalPoint3, RationalPoint3]:
    """Segment joining the midpoints of the two legs ``v1v2`` and ``v3v0``."""
    a, b, c, d = q.vertices
    return tuple(sorted((midpoint(b, c), midpoint(d, a))))  # type: ignore[return-value]


def intersection_census(strips: dict[int, StripFaceSet] | None = None) -> dict:
    """Distinct 1-dimensional pieces of the pairwise intersections, by role and kinds."""
    strips = strips or all_strips()
    pieces: dict = {}
    for i, j in itertools.combinations(sorted(strips), 2):
        for p in strip_pair_intersection(strips[i], strips[j]):
            label = (p.role, "x".join(sorted((p.kind_i, p.kind_j))))
            pieces.setdefault(label, set()).add(tuple(sorted(p.segment)))
    union = set().union(*pieces.values()) if pieces else set()
    return {"pieces": {k: sorted(v) for k, v in sorted(pieces.items())}, "union": sorted(union)}


# --- pairwise intersections -----------------------------------------------


@dataclass(frozen=True)
class IntersectionPiece:
    """A 1-dimensional piece of ``M_i ∩ M_j``.

    ``role`` is ``transversal`` when the open segment lies in the relative
    interior of both faces, and ``crease`` when it runs along an edge of one
    of them (a leg shared by two faces of the same strip).
    """

    segment: tuple[RationalPoint3, RationalPoint3]
    face_i: int
    kind_i: str
    face_j: int
    kind_j: str
    role: str


def _on_face_boundary(q: PlanarQuad, a, b) -> bool:
    return any(Segment3(*e).contains(a) and Segment3(*e).contains(b) for e in q.edges())


def strip_pair_intersection(fi: StripFaceSet, fj: StripFaceSet) -> list[IntersectionPiece]:
    """Every face-pair intersection between two distinct strips.

    A 2-dimensional overlap would refute the construction and raises.
    Isolated points are omitted; they are endpoints of the listed pieces or
    of the curves.
    """
    if fi.owner == fj.owner:
        raise ValueError("strip intersected with itself")
    out = []
    for a, qa in enumerate(fi.faces, start=1):
        for b, qb in enumerate(fj.faces, start=1):
            hit = quad_quad_intersection(qa, qb)
            if hit.kind == "region":
                raise ValueError(f"faces M{fi.owner}.{a} and M{fj.owner}.{b} overlap in a region")
            if hit.kind != "segment":
                continue
            s, t = hit.points
            crease = _on_face_boundary(qa, s, t) or _on_face_boundary(qb, s, t)
            out.append(
                IntersectionPiece(
                    (s, t), a, qa.kind, b, qb.kind, "crease" if crease else "transversal"
                )
            )
    return out


def is_q_vertex(p: RationalPoint3) -> bool:
    return all(c in (HALF, FIVE_HALVES) for c in p)


@dataclass(frozen=True)
class CubeEdge:
    segment: tuple[RationalPoint3, RationalPoint3]
    trapezoid_color: int
    parallelogram_color: int

    @property
    def axis(self) -> int:
        a, b = self.segment
        return next(k for k in range(3) if a[k] != b[k])


@dataclass(frozen=True)
class CubeQ:
    edges: tuple[CubeEdge, ...]

    def by_segment(self) -> dict:
        return {e.segment: e for e in self.edges}

    def check(self) -> list[str]:
        problems = []
        if len(self.edges) != 12:
            problems.append(f"{len(self.edges)} edges, expected 12")
        for e in self.edges:
            if e.trapezoid_color == e.parallelogram_color:
                problems.append(f"edge {e.segment} has equal colors")
        for color in range(1, 5):
            tr = [e for e in self.edges if e.trapezoid_color == color]
            pa = [e for e in self.edges if e.parallelogram_color == color]
            if len(tr) != 3 or len(pa) != 3:
                problems.append(f"color {color} appears {len(tr)}/{len(pa)} times")
                continue
            if {e.axis for e in tr} != {0, 1, 2}:
                problems.append(f"trapezoid edges of color {color} are not orthogonal")
            pts = [p for e in tr for p in e.segment]
            if len(set(pts)) != 6:
                problems.append(f"trapezoid edges of color {color} are not disjoint")
        return problems


def _q(bits: str) -> RationalPoint3:
    return P(*(HALF if b == "0" else FIVE_HALVES for b in bits))


def _qedge(a: str, b: str) -> tuple[RationalPoint3, RationalPoint3]:
    return tuple(sorted((_q(a), _q(b))))  # type: ignore[return-value]


# verbatim: (segment, subscript, superscript); 0 stands for 0.5 and 1 for 2.5
PRINTED_Q: tuple[tuple[tuple, int, int], ...] = (
    (_qedge("000", "100"), 2, 3),
    (_qedge("010", "110"), 1, 4),
    (_qedge("001", "101"), 3, 2),
    (_qedge("011", "111"), 4, 1),
    (_qedge("000", "010"), 3, 4),
    (_qedge("100", "110"), 1, 2),
    (_qedge("001", "011"), 4, 3),
    (_qedge("101", "111"), 2, 1),
    (_qedge("000", "001"), 4, 2),
    (_qedge("100", "101"), 1, 3),
    (_qedge("010", "011"), 2, 4),
    (_qedge("110", "111"), 3, 1),
)


def q_edges_from_strips(strips: dict[int, StripFaceSet] | None = None) -> dict:
    """Transversal trapezoid/parallelogram pieces, keyed by segment."""
    strips = strips or all_strips()
    found: dict = {}
    for i, j in itertools.combinations(sorted(strips), 2):
        for piece in strip_pair_intersection(strips[i], strips[j]):
            if piece.role != "transversal" or {piece.kind_i, piece.kind_j} != {"trapezoid", "parallelogram"}:
                continue
            t, p = (i, j) if piece.kind_i == "trapezoid" else (j, i)
            found.setdefault(piece.segment, []).append((t, p))
    return found


def derive_cube_bicoloring(strips: dict[int, StripFaceSet] | None = None) -> CubeQ:
    found = q_edges_from_strips(strips)
    edges = []
    for seg, owners in sorted(found.items()):
        if len(owners) != 1:
            raise ValueError(f"cube edge {seg} covered {len(owners)} times")
        if not all(is_q_vertex(p) for p in seg):
            raise ValueError(f"piece {seg} does not join vertices of Q")
        edges.append(CubeEdge(seg, *owners[0]))
    return CubeQ(tuple(edges))


def compare_with_printed_q(cube: CubeQ) -> dict:
    """Entry-by-entry agreement with the printed table under both readings."""
    geo = cube.by_segment()
    rows = []
    direct = swapped = 0
    for seg, sub, sup in PRINTED_Q:
        e = geo.get(seg)
        got = (e.trapezoid_color, e.parallelogram_color) if e else None
        ok_direct = got == (sub, sup)
        ok_swapped = got == (sup, sub)
        direct += ok_direct
        swapped += ok_swapped
        rows.append(
            {
                "segment": [[str(c) for c in p] for p in seg],
                "printed": [sub, sup],
                "computed": list(got) if got else None,
                "agrees": ok_direct,
            }
        )
    return {"rows": rows, "agree_subscript_is_trapezoid": direct, "agree_swapped": swapped}


def printed_q_as_cube() -> CubeQ:
    return CubeQ(tuple(CubeEdge(seg, sub, sup) for seg, sub, sup in PRINTED_Q))


# --- compound symmetries -----------------------------------------------------


def strip_image(iso: CubeIsometry, strips: dict[int, StripFaceSet]) -> dict[int, int | None]:
    """Where each strip goes under ``iso``; None if its image is not a strip."""
    keys = {s.key(): i for i, s in strips.items()}
    return {i: keys.get(s.image_key(iso)) for i, s in strips.items()}


def mirror_compound_key(strips: dict[int, StripFaceSet]) -> frozenset:
    from .exactgeom import REFLECT_X3

    return frozenset(s.image_key(REFLECT_X3) for s in strips.values())


def compound_key(strips: dict[int, StripFaceSet], iso: CubeIsometry = IDENTITY) -> frozenset:
    return frozenset(s.image_key(iso) for s in strips.values())


def compound_reflection_check(strips: dict[int, StripFaceSet] | None = None) -> dict:
    strips = strips or all_strips()
    fo = strip_image(F_O, strips)
    mirror = mirror_compound_key(strips)
    report = {
        "F_O": {
            "images": fo,
            "maps_i_to_5_minus_i": all(fo[i] == 5 - i for i in strips),
            "image_is_mirror_compound": compound_key(strips, F_O) == mirror,
        },
        "half_turns": {},
    }
    for name, iso in (("R_d^2", R_D2), ("R_v^2", R_V2), ("R_h^2", R_H2)):
        report["half_turns"][name] = strip_image(iso, strips)
    return report


def compound_orbit_size(strips: dict[int, StripFaceSet] | None = None) -> int:
    strips = strips or all_strips()
    return len({compound_key(strips, g) for g in all_isometries()})


def leg_midpoints(f: StripFaceSet) -> list[RationalPoint3]:
    return [midpoint(a, b) for a, b in f.legs()]
