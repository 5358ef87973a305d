"""The polylink of four hollow equilateral triangles.

The large triangle ``T_i`` has as vertices the centers of the three unit
segments of ``C_i``; its hole ``T'_i`` has as vertices the midpoints between
those vertices and the cube center ``O``.  Side midpoints of each ``T_i``
coincide with hole vertices of the other triangles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .curves import all_canonical_curves, unit_segment_centers
from .exactgeom import CENTER, P, RationalPoint3, Segment3, coplanar, dist2, midpoint
from .surfaces import FaceComplex, verify_surface
from . import knots

# verbatim, in the printed order of each row
PRINTED_VERTICES = {
    1: (P(1.5, 0, 3), P(3, 1.5, 0), P(0, 3, 1.5)),
    2: (P(1.5, 0, 0), P(0, 1.5, 3), P(3, 3, 1.5)),
    3: (P(1.5, 3, 3), P(0, 1.5, 0), P(3, 0, 1.5)),
    4: (P(1.5, 3, 0), P(3, 1.5, 3), P(0, 0, 1.5)),
}

# the first row prints "2,25" with a decimal comma; read as 2.25
PRINTED_HOLE_TOKENS = {
    1: (("1.50", "0.75", "2.25"), ("2,25", "1.50", "0.75"), ("0.75", "2.25", "1.50")),
    2: (("1.50", "0.75", "0.75"), ("0.75", "1.50", "2.25"), ("2.25", "2.25", "1.50")),
    3: (("1.50", "2.25", "2.25"), ("0.75", "1.50", "0.75"), ("2.25", "0.75", "1.50")),
    4: (("1.50", "2.25", "0.75"), ("2.25", "1.50", "2.25"), ("0.75", "0.75", "1.50")),
}

PRINTED_SIDE_MIDPOINTS = {
    1: (P(2.25, 0.75, 1.5), P(1.5, 2.25, 0.75), P(0.75, 1.5, 2.25)),
    2: (P(0.75, 0.75, 1.5), P(1.5, 2.25, 2.25), P(2.25, 1.5, 0.75)),
    3: (P(0.75, 2.25, 1.5), P(1.5, 0.75, 0.75), P(2.25, 1.5, 2.25)),
    4: (P(2.25, 2.25, 1.5), P(1.5, 0.75, 2.25), P(0.75, 1.5, 0.75)),
}

SIDES = ("12", "23", "31")

# B_{i,jk} -> A_{i',j'} as printed, rows i, columns jk = 12, 23, 31
PRINTED_CORRESPONDENCE = {
    1: ((3, 3), (4, 1), (2, 2)),
    2: ((4, 3), (3, 1), (1, 2)),
    3: ((1, 3), (2, 1), (4, 2)),
    4: ((2, 3), (1, 1), (3, 2)),
}

# labels of the printed 6-cycles: ("B", i, j) or ("A", i, j)
PRINTED_SIX_CYCLES = {
    1: (("B", 1, 1), ("A", 3, 3), ("B", 1, 2), ("A", 4, 1), ("B", 1, 3), ("A", 2, 2)),
    2: (("B", 2, 1), ("A", 1, 2), ("B", 2, 3), ("A", 3, 1), ("B", 2, 2), ("A", 4, 1)),
    3: (("B", 3, 1), ("A", 1, 3), ("B", 3, 2), ("A", 2, 1), ("B", 3, 3), ("A", 4, 2)),
    4: (("B", 4, 1), ("A", 1, 1), ("B", 4, 2), ("A", 2, 3), ("B", 4, 1), ("A", 3, 2)),
}


def normalize_decimal(token: str) -> Fraction:
    return Fraction(token.replace(",", "."))


def printed_hole_vertices(i: int) -> tuple[RationalPoint3, ...]:
    return tuple(P(*(normalize_decimal(t) for t in row)) for row in PRINTED_HOLE_TOKENS[i])


def normalized_tokens() -> list[str]:
    return sorted({t for rows in PRINTED_HOLE_TOKENS.values() for row in rows for t in row if "," in t})


@dataclass(frozen=True)
class Triangle3:
    color: int
    vertices: tuple[RationalPoint3, RationalPoint3, RationalPoint3]

    def side_squared(self) -> list[Fraction]:
        v = self.vertices
        return [dist2(v[k], v[(k + 1) % 3]) for k in range(3)]

    def is_equilateral(self) -> bool:
        return len(set(self.side_squared())) == 1

    def centroid(self) -> RationalPoint3:
        a, b, c = self.vertices
        return (a + b + c).scale(Fraction(1, 3))

    def normal(self) -> RationalPoint3:
        a, b, c = self.vertices
        return (b - a).cross(c - a)

    def point_key(self) -> frozenset:
        return frozenset(self.vertices)


@dataclass(frozen=True)
class HollowTriangle:
    outer: Triangle3
    inner: Triangle3

    def is_concentric_homothetic(self) -> bool:
        ok = self.outer.centroid() == self.inner.centroid()
        for b, a in zip(self.outer.vertices, self.inner.vertices):
            ok = ok and (a - CENTER) == (b - CENTER).scale(Fraction(1, 2))
        return ok

    def annulus_triangles(self) -> list[tuple[int, int, int]]:
        """Six triangles over vertex list ``outer + inner`` (indices 0-2, 3-5)."""
        tris = []
        for k in range(3):
            n = (k + 1) % 3
            tris.append((k, n, 3 + n))
            tris.append((k, 3 + n, 3 + k))
        return tris


def build_triangles() -> dict[int, Triangle3]:
    """Large triangles in printed vertex order, checked against the curves."""
    curves = all_canonical_curves()
    out = {}
    for i, verts in PRINTED_VERTICES.items():
        if frozenset(verts) != unit_segment_centers(curves[i]):
            raise ValueError(f"T{i} does not match the unit-segment centers of C{i}")
        out[i] = Triangle3(i, verts)
    return out


def build_inner_triangles(tris: dict[int, Triangle3] | None = None) -> dict[int, Triangle3]:
    tris = tris or build_triangles()
    return {
        i: Triangle3(i, tuple(midpoint(b, CENTER) for b in t.vertices))  # type: ignore[arg-type]
        for i, t in tris.items()
    }


def hollow_triangles() -> dict[int, HollowTriangle]:
    tris = build_triangles()
    inner = build_inner_triangles(tris)
    return {i: HollowTriangle(tris[i], inner[i]) for i in tris}


def side_midpoints(i: int, tris: dict[int, Triangle3] | None = None) -> tuple[RationalPoint3, ...]:
    """``(B_{i,12}, B_{i,23}, B_{i,31})``."""
    v = (tris or build_triangles())[i].vertices
    return tuple(midpoint(v[k], v[(k + 1) % 3]) for k in range(3))


@dataclass(frozen=True)
class MidpointCorrespondence:
    table: dict  # (i, "12") -> (i', j')

    def is_bijection(self) -> bool:
        return len(set(self.table.values())) == len(self.table) == 12


def build_correspondence(tris: dict[int, Triangle3] | None = None) -> MidpointCorrespondence:
    """Match side midpoints to hole vertices by exact point equality."""
    tris = tris or build_triangles()
    inner = build_inner_triangles(tris)
    holes = {(i, j + 1): p for i, t in inner.items() for j, p in enumerate(t.vertices)}
    table = {}
    for i in tris:
        for side, m in zip(SIDES, side_midpoints(i, tris)):
            hits = [key for key, p in holes.items() if p == m]
            if len(hits) != 1:
                raise ValueError(f"B_{i},{side} matches {len(hits)} hole vertices")
            table[(i, side)] = hits[0]
    return MidpointCorrespondence(table)


def correspondence_diff(corr: MidpointCorrespondence) -> list[dict]:
    out = []
    for i, row in PRINTED_CORRESPONDENCE.items():
        for side, printed in zip(SIDES, row):
            got = corr.table[(i, side)]
            if got != printed:
                out.append({"entry": f"B_{i},{side}", "printed": list(printed), "computed": list(got)})
    return out


def six_cycles(corr: MidpointCorrespondence | None = None) -> dict[int, tuple]:
    """Alternating vertex/side-midpoint cycles, midpoints named by hole vertex."""
    corr = corr or build_correspondence()
    out = {}
    for i in range(1, 5):
        seq = []
        for j, side in enumerate(SIDES, start=1):
            seq.append(("B", i, j))
            seq.append(("A",) + corr.table[(i, side)])
        out[i] = tuple(seq)
    return out


def _cyclic_variants(seq):
    n = len(seq)
    for s in (list(seq), list(reversed(seq))):
        for r in range(n):
            yield tuple(s[r:] + s[:r])


def six_cycle_diff(computed: tuple, printed: tuple) -> list[dict]:
    """Fewest label mismatches over rotations and reversals of the printed cycle."""
    best = None
    for variant in _cyclic_variants(printed):
        diff = [
            {"position": k, "printed": list(variant[k]), "computed": list(computed[k])}
            for k in range(len(computed))
            if variant[k] != computed[k]
        ]
        if best is None or len(diff) < len(best):
            best = diff
    return best or []


def cuboctahedron_check(tris: dict[int, Triangle3] | None = None) -> dict:
    tris = tris or build_triangles()
    pts = sorted(p for t in tris.values() for p in t.vertices)
    radii = {dist2(p, CENTER) for p in pts}
    pair_d = {(a, b): dist2(a, b) for a, b in itertools.combinations(pts, 2)}
    nearest = min(pair_d.values())
    edges = [e for e, d in pair_d.items() if d == nearest]
    degree = {p: sum(p in e for e in edges) for p in pts}
    adj = {p: {q for e in edges for q in e if p in e and q != p} for p in pts}
    triangles = [
        (a, b, c) for a, b, c in itertools.combinations(pts, 3) if b in adj[a] and c in adj[a] and c in adj[b]
    ]
    squares = []
    for quad in itertools.combinations(pts, 4):
        if not coplanar(quad):
            continue
        for cyc in itertools.permutations(quad[1:]):
            ring = (quad[0],) + cyc
            if all(ring[(k + 1) % 4] in adj[ring[k]] for k in range(4)):
                if not any(ring[(k + 2) % 4] in adj[ring[k]] for k in range(4)):
                    squares.append(ring)
                break
    index = {p: n for n, p in enumerate(pts)}
    fc = FaceComplex.from_vertex_walks(
        [tuple(index[p] for p in f) for f in triangles + squares]
    )
    surface = verify_surface(fc)
    return {
        "points": len(pts),
        "radius_squared": sorted(radii),
        "edge_squared": nearest,
        "edges": len(edges),
        "degrees": sorted(set(degree.values())),
        "triangles": len(triangles),
        "squares": len(squares),
        "euler_characteristic": surface.euler_characteristic,
        "closed": surface.closed,
        "is_cuboctahedron": (
            len(pts) == 12
            and len(radii) == 1
            and len(edges) == 24
            and set(degree.values()) == {4}
            and len(triangles) == 8
            and len(squares) == 6
            and surface.closed
            and surface.euler_characteristic == 2
        ),
    }


def linking_numbers(tris: dict[int, Triangle3] | None = None) -> dict[tuple[int, int], int | None]:
    """Linking numbers of the outer triangle boundaries; None if they touch."""
    tris = tris or build_triangles()
    return {
        (i, j): knots.linking_number(tris[i].vertices, tris[j].vertices)
        for i, j in itertools.combinations(sorted(tris), 2)
    }


def boundary_contacts() -> dict[int, list[tuple[int, int]]]:
    """Hole vertices ``A_{i',j'}`` lying on the outer boundary of each ``T_i``."""
    hol = hollow_triangles()
    out = {}
    for i, h in hol.items():
        v = h.outer.vertices
        sides = [Segment3(v[k], v[(k + 1) % 3]) for k in range(3)]
        out[i] = sorted(
            (j, k + 1)
            for j, g in hol.items()
            for k, a in enumerate(g.inner.vertices)
            if any(s.contains(a) for s in sides)
        )
    return out
