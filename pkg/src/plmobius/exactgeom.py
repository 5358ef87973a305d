"""Exact rational geometry in [0,3]^3.

Points, segments and planar convex polygons are built on
:class:`fractions.Fraction`; no floating point is used anywhere.  The
isometries of the cube ``[0,3]^3`` act about its center ``O``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence


class RationalPoint3(NamedTuple):
    x: Fraction
    y: Fraction
    z: Fraction

    def __add__(self, other):  # type: ignore[override]
        return RationalPoint3(self.x + other.x, self.y + other.y, self.z + other.z)

    def __sub__(self, other):
        return RationalPoint3(self.x - other.x, self.y - other.y, self.z - other.z)

    def scale(self, k) -> "RationalPoint3":
        k = Fraction(k)
        return RationalPoint3(self.x * k, self.y * k, self.z * k)

    def dot(self, other) -> Fraction:
        return self.x * other.x + self.y * other.y + self.z * other.z

    def cross(self, other) -> "RationalPoint3":
        return RationalPoint3(
            self.y * other.z - self.z * other.y,
            self.z * other.x - self.x * other.z,
            self.x * other.y - self.y * other.x,
        )

    def norm2(self) -> Fraction:
        return self.dot(self)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0 and self.z == 0

    def __repr__(self) -> str:
        return "P(%s, %s, %s)" % tuple(_fmt(c) for c in self)


def _fmt(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return str(float(c)) if 4 % c.denominator == 0 else str(c)


def P(x, y, z) -> RationalPoint3:
    """Build a point from ints, strings like ``"2.25"`` or Fractions.

    Floats are converted through their decimal string so ``1.5`` is exact.
    """
    return RationalPoint3(*(_frac(c) for c in (x, y, z)))


def _frac(c) -> Fraction:
    if isinstance(c, float):
        return Fraction(repr(c))
    return Fraction(c)


def lattice_point(digits: str) -> RationalPoint3:
    """Parse the three-digit notation ``"103"`` for the point (1, 0, 3)."""
    if len(digits) != 3 or not digits.isdigit():
        raise ValueError(f"expected three digits, got {digits!r}")
    return P(*(int(d) for d in digits))


ZERO = P(0, 0, 0)
CENTER = P("3/2", "3/2", "3/2")


def midpoint(a: RationalPoint3, b: RationalPoint3) -> RationalPoint3:
    return (a + b).scale(Fraction(1, 2))


def dist2(a: RationalPoint3, b: RationalPoint3) -> Fraction:
    return (a - b).norm2()


def format_coord(c: Fraction) -> str:
    """Exact decimal text for a coordinate whose denominator divides 4."""
    if 100 % c.denominator:
        raise ValueError(f"{c} has no short exact decimal")
    if c.denominator == 1:
        return str(c.numerator)
    sign = "-" if c < 0 else ""
    c = abs(c)
    whole, frac = divmod(c * 100, 100)
    text = f"{int(whole)}.{int(frac):02d}".rstrip("0")
    return sign + text


@dataclass(frozen=True)
class Segment3:
    a: RationalPoint3
    b: RationalPoint3

    def __post_init__(self):
        if self.a == self.b:
            raise ValueError("degenerate segment")

    @property
    def direction(self) -> RationalPoint3:
        return self.b - self.a

    def length2(self) -> Fraction:
        return self.direction.norm2()

    def axis(self) -> int | None:
        """Index of the only varying coordinate, or None if not axis-aligned."""
        varying = [k for k in range(3) if self.a[k] != self.b[k]]
        return varying[0] if len(varying) == 1 else None

    def is_axis_aligned(self) -> bool:
        return self.axis() is not None

    def contains(self, p: RationalPoint3) -> bool:
        return _on_segment(self.a, self.b, p)

    def key(self) -> frozenset:
        return frozenset((self.a, self.b))


def _on_segment(a, b, p) -> bool:
    d = b - a
    w = p - a
    if not d.cross(w).is_zero():
        return False
    t = w.dot(d)
    return 0 <= t <= d.norm2()


@dataclass(frozen=True)
class Intersection:
    """Exact intersection of two closed convex sets.

    ``kind`` is one of ``empty``, ``point``, ``segment``, ``region``.  For a
    ``segment`` the two endpoints are sorted; a ``region`` lists its convex
    polygon vertices in cyclic order.
    """

    kind: str
    points: tuple = ()

    @property
    def dimension(self) -> int:
        return {"empty": -1, "point": 0, "segment": 1, "region": 2}[self.kind]

    def __bool__(self) -> bool:
        return self.kind != "empty"


EMPTY = Intersection("empty")


def _collinear_overlap(a, b, c, d) -> Intersection:
    # all four points on one line through a with direction b - a
    u = b - a
    den = u.norm2()
    ts = sorted([(Fraction(0), a), (Fraction(1), b)])
    tc = (c - a).dot(u) / den
    td = (d - a).dot(u) / den
    lo = max(ts[0][0], min(tc, td))
    hi = min(ts[1][0], max(tc, td))
    if lo > hi:
        return EMPTY
    p = a + u.scale(lo)
    if lo == hi:
        return Intersection("point", (p,))
    q = a + u.scale(hi)
    return Intersection("segment", tuple(sorted((p, q))))


def point_segment_intersection(a, b, c, d) -> Intersection:
    """Intersection of closed segments [a,b] and [c,d]; either may be a point."""
    if a == b and c == d:
        return Intersection("point", (a,)) if a == c else EMPTY
    if a == b:
        return Intersection("point", (a,)) if _on_segment(c, d, a) else EMPTY
    if c == d:
        return Intersection("point", (c,)) if _on_segment(a, b, c) else EMPTY
    u = b - a
    v = d - c
    w = c - a
    n = u.cross(v)
    if n.is_zero():
        if not w.cross(u).is_zero():
            return EMPTY
        return _collinear_overlap(a, b, c, d)
    if w.dot(n) != 0:
        return EMPTY
    nn = n.norm2()
    s = w.cross(v).dot(n) / nn
    t = w.cross(u).dot(n) / nn
    if 0 <= s <= 1 and 0 <= t <= 1:
        return Intersection("point", (a + u.scale(s),))
    return EMPTY


def segment_intersection(s: Segment3, t: Segment3) -> Intersection:
    return point_segment_intersection(s.a, s.b, t.a, t.b)


def coplanar(points: Sequence[RationalPoint3]) -> bool:
    base = points[0]
    vecs = [p - base for p in points[1:]]
    normal = None
    for u, v in itertools.combinations(vecs, 2):
        n = u.cross(v)
        if not n.is_zero():
            normal = n
            break
    if normal is None:
        return True
    return all(normal.dot(v) == 0 for v in vecs)


@dataclass(frozen=True)
class PlanarQuad:
    """Convex planar quadrilateral with ``v0v1`` parallel to ``v2v3``."""

    vertices: tuple
    kind: str = ""

    def __post_init__(self):
        vs = self.vertices
        if len(vs) != 4 or len(set(vs)) != 4:
            raise ValueError("a quad needs four distinct vertices")
        if not coplanar(vs):
            raise ValueError(f"non-coplanar quad {vs}")
        if not (vs[1] - vs[0]).cross(vs[3] - vs[2]).is_zero():
            raise ValueError("sides v0v1 and v2v3 are not parallel")
        if not _is_convex(vs):
            raise ValueError(f"non-convex quad {vs}")
        kind = classify_quad(vs)
        if self.kind and self.kind != kind:
            raise ValueError(f"quad is a {kind}, not a {self.kind}")
        object.__setattr__(self, "kind", kind)

    def normal(self) -> RationalPoint3:
        v = self.vertices
        return (v[1] - v[0]).cross(v[2] - v[0])

    def edges(self):
        v = self.vertices
        return [(v[k], v[(k + 1) % 4]) for k in range(4)]

    def key(self) -> frozenset:
        return frozenset(self.vertices)

    def contains(self, p: RationalPoint3) -> bool:
        return convex_polygon_contains(self.vertices, p)


def classify_quad(vs) -> str:
    top = dist2(vs[0], vs[1])
    bottom = dist2(vs[2], vs[3])
    if top == bottom:
        return "parallelogram"
    if {top, bottom} == {1, 9}:
        return "trapezoid"
    return "quad"


def _is_convex(vs) -> bool:
    n = None
    k = len(vs)
    for i in range(k):
        c = (vs[(i + 1) % k] - vs[i]).cross(vs[(i + 2) % k] - vs[(i + 1) % k])
        if c.is_zero():
            return False
        if n is None:
            n = c
        elif n.dot(c) <= 0:
            return False
    return True


def convex_polygon_contains(vs, p) -> bool:
    """Closed containment of ``p`` in the convex planar polygon ``vs``."""
    n = (vs[1] - vs[0]).cross(vs[2] - vs[0])
    if n.dot(p - vs[0]) != 0:
        return False
    k = len(vs)
    for i in range(k):
        a, b = vs[i], vs[(i + 1) % k]
        if (b - a).cross(p - a).dot(n) < 0:
            return False
    return True


def quad_area_squared(q: PlanarQuad) -> Fraction:
    """Squared Euclidean area via the vector area (sum of cross products)."""
    return polygon_area_squared(q.vertices)


def polygon_area_squared(vs) -> Fraction:
    total = ZERO
    for i in range(len(vs)):
        total = total + vs[i].cross(vs[(i + 1) % len(vs)])
    area2 = total.norm2() / 4
    if area2 == 0:
        raise ValueError("degenerate polygon has zero area")
    return area2


def _plane_section(vs, normal, offset) -> list:
    """Points of the convex polygon ``vs`` lying on the plane ``normal.x = offset``."""
    out = []
    k = len(vs)
    side = [normal.dot(v) - offset for v in vs]
    for i in range(k):
        j = (i + 1) % k
        if side[i] == 0:
            out.append(vs[i])
        elif side[j] != 0 and (side[i] < 0) != (side[j] < 0):
            t = side[i] / (side[i] - side[j])
            out.append(vs[i] + (vs[j] - vs[i]).scale(t))
    return sorted(set(out))


def _as_segment(points) -> tuple | None:
    if not points:
        return None
    return points[0], points[-1]


def _hull_2d(points, normal):
    # drop the coordinate where the normal is largest, then monotone chain
    drop = max(range(3), key=lambda k: abs(normal[k]))
    keep = [k for k in range(3) if k != drop]
    pts = sorted(set(points), key=lambda p: (p[keep[0]], p[keep[1]]))
    if len(pts) <= 2:
        return pts

    def cross(o, a, b):
        return (a[keep[0]] - o[keep[0]]) * (b[keep[1]] - o[keep[1]]) - (
            a[keep[1]] - o[keep[1]]
        ) * (b[keep[0]] - o[keep[0]])

    lower: list = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def polygon_intersection(ps: Sequence, qs: Sequence) -> Intersection:
    """Exact intersection of two convex planar polygons in 3D."""
    np_ = (ps[1] - ps[0]).cross(ps[2] - ps[0])
    nq = (qs[1] - qs[0]).cross(qs[2] - qs[0])
    if np_.cross(nq).is_zero():
        if np_.dot(qs[0] - ps[0]) != 0:
            return EMPTY
        return _coplanar_intersection(ps, qs, np_)
    sp = _as_segment(_plane_section(ps, nq, nq.dot(qs[0])))
    sq = _as_segment(_plane_section(qs, np_, np_.dot(ps[0])))
    if sp is None or sq is None:
        return EMPTY
    return point_segment_intersection(sp[0], sp[1], sq[0], sq[1])


def _coplanar_intersection(ps, qs, normal) -> Intersection:
    cand = [p for p in ps if convex_polygon_contains(qs, p)]
    cand += [q for q in qs if convex_polygon_contains(ps, q)]
    for i in range(len(ps)):
        for j in range(len(qs)):
            hit = point_segment_intersection(
                ps[i], ps[(i + 1) % len(ps)], qs[j], qs[(j + 1) % len(qs)]
            )
            cand.extend(hit.points)
    cand = sorted(set(cand))
    if not cand:
        return EMPTY
    if len(cand) == 1:
        return Intersection("point", (cand[0],))
    if coplanar_collinear(cand):
        return Intersection("segment", (cand[0], cand[-1]))
    return Intersection("region", tuple(_hull_2d(cand, normal)))


def coplanar_collinear(points) -> bool:
    a, b = points[0], points[-1]
    return all((b - a).cross(p - a).is_zero() for p in points)


def quad_quad_intersection(p: PlanarQuad, q: PlanarQuad) -> Intersection:
    return polygon_intersection(p.vertices, q.vertices)


def clip_to_box(vs: Sequence[RationalPoint3], lo, hi) -> list[RationalPoint3]:
    """Sutherland-Hodgman clip of a convex polygon to the box ``[lo, hi]^3``."""
    lo, hi = _frac(lo), _frac(hi)
    poly = list(vs)
    for axis in range(3):
        for bound, keep_ge in ((lo, True), (hi, False)):
            if not poly:
                return []

            def inside(p):
                return p[axis] >= bound if keep_ge else p[axis] <= bound

            out = []
            for i in range(len(poly)):
                a, b = poly[i], poly[(i + 1) % len(poly)]
                if inside(a):
                    out.append(a)
                if inside(a) != inside(b):
                    t = (bound - a[axis]) / (b[axis] - a[axis])
                    out.append(a + (b - a).scale(t))
            poly = [p for i, p in enumerate(out) if p != out[i - 1]] if len(out) > 1 else out
    return poly


def meets_open_box(vs: Sequence[RationalPoint3], lo, hi) -> bool:
    """Whether a convex polygon has a point strictly inside ``(lo, hi)^3``.

    The clipped polygon meets the open box iff its vertex centroid does:
    a centroid on a face plane forces every clipped vertex onto that plane.
    """
    clipped = clip_to_box(vs, lo, hi)
    if not clipped:
        return False
    n = len(clipped)
    g = RationalPoint3(*(sum(p[k] for p in clipped) / n for k in range(3)))
    lo, hi = _frac(lo), _frac(hi)
    return all(lo < c < hi for c in g)


# --- cube isometries -------------------------------------------------------


@dataclass(frozen=True, order=True)
class CubeIsometry:
    """``p -> O + M (p - O)`` for a signed 3x3 permutation matrix ``M``.

    ``matrix`` is stored row-major as a tuple of three row tuples.
    """

    matrix: tuple

    def __post_init__(self):
        m = self.matrix
        ok = len(m) == 3 and all(len(r) == 3 for r in m)
        ok = ok and all(sum(abs(e) for e in r) == 1 for r in m)
        ok = ok and all(sum(abs(m[i][j]) for i in range(3)) == 1 for j in range(3))
        ok = ok and all(e in (-1, 0, 1) for r in m for e in r)
        if not ok:
            raise ValueError(f"not a signed permutation matrix: {m}")

    def __call__(self, p: RationalPoint3) -> RationalPoint3:
        return apply_isometry(self, p)

    def compose(self, other: "CubeIsometry") -> "CubeIsometry":
        """``self`` after ``other``."""
        a, b = self.matrix, other.matrix
        return CubeIsometry(
            tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
                for i in range(3)
            )
        )

    def __matmul__(self, other: "CubeIsometry") -> "CubeIsometry":
        return self.compose(other)

    def inverse(self) -> "CubeIsometry":
        m = self.matrix
        return CubeIsometry(tuple(tuple(m[j][i] for j in range(3)) for i in range(3)))

    def det(self) -> int:
        m = self.matrix
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    def order(self) -> int:
        g, n = self, 1
        while g != IDENTITY:
            g, n = self @ g, n + 1
        return n

    def is_rotation(self) -> bool:
        return self.det() == 1


def apply_isometry(iso: CubeIsometry, p: RationalPoint3) -> RationalPoint3:
    d = p - CENTER
    m = iso.matrix
    return RationalPoint3(
        CENTER.x + m[0][0] * d.x + m[0][1] * d.y + m[0][2] * d.z,
        CENTER.y + m[1][0] * d.x + m[1][1] * d.y + m[1][2] * d.z,
        CENTER.z + m[2][0] * d.x + m[2][1] * d.y + m[2][2] * d.z,
    )


def all_isometries() -> list[CubeIsometry]:
    """The 48 isometries of the cube, in lexicographic matrix order."""
    out = []
    for perm in itertools.permutations(range(3)):
        for signs in itertools.product((-1, 1), repeat=3):
            rows = []
            for i in range(3):
                row = [0, 0, 0]
                row[perm[i]] = signs[i]
                rows.append(tuple(row))
            out.append(CubeIsometry(tuple(rows)))
    return sorted(out)


def _diag(a, b, c) -> CubeIsometry:
    return CubeIsometry(((a, 0, 0), (0, b, 0), (0, 0, c)))


IDENTITY = _diag(1, 1, 1)
#: central inversion about O
F_O = _diag(-1, -1, -1)
#: half turns about the in-depth (x3), vertical (x2) and horizontal (x1) axes
R_D2 = _diag(-1, -1, 1)
R_V2 = _diag(-1, 1, -1)
R_H2 = _diag(1, -1, -1)
#: quarter turns about the same axes
R_D = CubeIsometry(((0, -1, 0), (1, 0, 0), (0, 0, 1)))
R_V = CubeIsometry(((0, 0, 1), (0, 1, 0), (-1, 0, 0)))
R_H = CubeIsometry(((1, 0, 0), (0, 0, -1), (0, 1, 0)))
#: reflections in the three coordinate planes through O
REFLECT_X1 = _diag(-1, 1, 1)
REFLECT_X2 = _diag(1, -1, 1)
REFLECT_X3 = _diag(1, 1, -1)


def rotation_about_axis(axis: Sequence[int], quarter_or_third: int = 1) -> CubeIsometry:
    """Cube rotation about the integer axis through O by the minimal angle.

    For a body diagonal ``axis`` (entries in {-1,1}) this is the 120 degree
    turn counterclockwise when viewed from the tip of ``axis``; for other
    axes a quarter turn (coordinate axis) or half turn (face diagonal).
    ``quarter_or_third`` is the power taken.
    """
    ax = P(*axis)
    best = None
    for g in all_isometries():
        if not g.is_rotation() or g == IDENTITY:
            continue
        if apply_isometry(g, CENTER + ax) != CENTER + ax:
            continue
        # counterclockwise about ax: (g(v) - v) . (ax x v) > 0 for v not on ax
        v = next(
            P(*e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1)) if not ax.cross(P(*e)).is_zero()
        )
        gv = apply_isometry(g, CENTER + v) - CENTER
        if ax.cross(v).dot(gv) <= 0 and g.order() != 2:
            continue
        if best is None or g.order() > best.order():
            best = g
    if best is None:
        raise ValueError(f"{axis} is not a symmetry axis of the cube")
    g = IDENTITY
    for _ in range(quarter_or_third % best.order()):
        g = best @ g
    return g


def transform_points(iso: CubeIsometry, pts: Iterable[RationalPoint3]) -> list:
    return [apply_isometry(iso, p) for p in pts]
