"""Knot diagrams of closed PL curves and two classical invariants.

A curve is projected along an integer direction chosen by a deterministic
search; every genericity condition is decided exactly.  The diagram yields
a planar-diagram (PD) code from which the Kauffman bracket is evaluated by
a full state sum, and a Gauss code from which the knot determinant is read
off the coloring matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .exactgeom import RationalPoint3, P, Segment3, apply_isometry, CubeIsometry, segment_intersection

# --- Laurent polynomials ----------------------------------------------------


class LaurentPolynomial:
    """Integer Laurent polynomial in one variable, stored sparsely."""

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        clean = {}
        for e, c in dict(terms or {}).items():
            if c:
                clean[int(e)] = int(c)
        self._terms = tuple(sorted(clean.items()))

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPolynomial":
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def __eq__(self, other):
        return isinstance(other, LaurentPolynomial) and self._terms == other._terms

    def __hash__(self):
        return hash(self._terms)

    def __add__(self, other):
        t = self.terms
        for e, c in other._terms:
            t[e] = t.get(e, 0) + c
        return LaurentPolynomial(t)

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial({e: c * other for e, c in self._terms})
        t: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                t[e1 + e2] = t.get(e1 + e2, 0) + c1 * c2
        return LaurentPolynomial(t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1 or abs(self._terms[0][1]) != 1:
                raise ValueError("only unit monomials can be inverted")
            e, c = self._terms[0]
            return LaurentPolynomial({-e * -n: c ** (-n)})
        out = LaurentPolynomial({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def mirror(self) -> "LaurentPolynomial":
        """Substitute the variable by its inverse."""
        return LaurentPolynomial({-e: c for e, c in self._terms})

    def substitute_power(self, k: int) -> "LaurentPolynomial":
        """Rescale exponents: ``f(x) -> f(x^(1/k))``; every exponent must divide."""
        if any(e % k for e, _ in self._terms):
            raise ValueError(f"exponents not divisible by {k}")
        return LaurentPolynomial({e // k: c for e, c in self._terms})

    def evaluate(self, x) -> Fraction:
        x = Fraction(x)
        return sum((c * x**e for e, c in self._terms), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __repr__(self):
        return f"LaurentPolynomial({self.terms})"

    def to_string(self, var: str = "t") -> str:
        if not self._terms:
            return "0"
        parts = []
        for e, c in sorted(self._terms, reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                power = var if e == 1 else f"{var}^{e}"
                body = power if mag == 1 else f"{mag}*{power}"
            parts.append(("-" if c < 0 else "+") + body)
        text = " ".join(parts)
        return text[1:] if text.startswith("+") else text

    def __str__(self):
        return self.to_string()


A = LaurentPolynomial.monomial(1)
LOOP = LaurentPolynomial({2: -1, -2: -1})  # -A^2 - A^-2

# --- diagrams ---------------------------------------------------------------


class DegenerateProjection(ValueError):
    pass


@dataclass(frozen=True)
class Crossing:
    label: int
    over_position: Fraction  # curve parameter: segment index + fraction
    under_position: Fraction
    sign: int
    over_component: int = 0
    under_component: int = 0


@dataclass(frozen=True)
class KnotDiagram:
    direction: tuple[int, int, int]
    crossings: tuple[Crossing, ...]
    gauss_code: tuple[tuple[int, str], ...]  # (label, "O"|"U") along the curve
    pd_code: tuple[tuple[int, int, int, int], ...]

    @property
    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def gauss_text(self) -> str:
        out = []
        for label, kind in self.gauss_code:
            sign = self.crossings[label - 1].sign
            out.append(f"{kind}{label}{'+' if sign > 0 else '-'}")
        return " ".join(out)


def _projection_basis(d: RationalPoint3):
    axis = min(
        (P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)), key=lambda a: abs(a.dot(d))
    )
    e1 = d.cross(axis)
    e2 = d.cross(e1)
    return e1, e2


def _cross2(a, b) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def _sub2(a, b):
    return (a[0] - b[0], a[1] - b[1])


def _intersect_2d(p, q, r, s):
    """Closed 2D segment intersection.

    Returns ``None``, ``("point", t, u)`` with parameters along both
    segments, or ``("overlap",)`` for collinear overlap.
    """
    u = _sub2(q, p)
    v = _sub2(s, r)
    w = _sub2(r, p)
    den = _cross2(u, v)
    if den == 0:
        if _cross2(w, u) != 0:
            return None
        uu = u[0] * u[0] + u[1] * u[1]
        t0 = (w[0] * u[0] + w[1] * u[1]) / uu
        t1 = t0 + Fraction(v[0] * u[0] + v[1] * u[1]) / uu
        lo, hi = min(t0, t1), max(t0, t1)
        if hi < 0 or lo > 1:
            return None
        if hi == 0 or lo == 1:
            t = Fraction(0) if hi == 0 else Fraction(1)
            # single touching point at an endpoint
            tr = Fraction(0) if (t0 == t) else Fraction(1)
            return ("point", t, tr)
        return ("overlap",)
    t = Fraction(_cross2(w, v)) / den
    uu_ = Fraction(_cross2(w, u)) / den
    if 0 <= t <= 1 and 0 <= uu_ <= 1:
        return ("point", t, uu_)
    return None


def direction_candidates(bound: int = 7) -> Iterator[tuple[int, int, int]]:
    """Integer directions by increasing max-norm, lexicographic, axes skipped."""
    for n in range(1, bound + 1):
        for d in itertools.product(range(-n, n + 1), repeat=3):
            if max(abs(c) for c in d) != n:
                continue
            if sum(1 for c in d if c) < 2:
                continue
            yield d


def _diagram(components: Sequence[Sequence[RationalPoint3]], d: tuple[int, int, int]):
    dv = P(*d)
    e1, e2 = _projection_basis(dv)
    segs = []  # (component, index, a2, b2, a3, b3)
    for ci, verts in enumerate(components):
        n = len(verts)
        for k in range(n):
            a, b = verts[k], verts[(k + 1) % n]
            if (b - a).cross(dv).is_zero():
                raise DegenerateProjection("segment projects to a point")
            segs.append(
                (ci, k, (a.dot(e1), a.dot(e2)), (b.dot(e1), b.dot(e2)), a, b, n)
            )
    raw = []
    seen_points = {}
    for i, j in itertools.combinations(range(len(segs)), 2):
        ci, ki, p, q, a, b, ni = segs[i]
        cj, kj, r, s, c, e, nj = segs[j]
        hit = _intersect_2d(p, q, r, s)
        adjacent = ci == cj and (kj == (ki + 1) % ni or ki == (kj + 1) % ni)
        if adjacent:
            if hit is None or hit[0] == "overlap":
                raise DegenerateProjection("adjacent segments overlap in projection")
            # must meet only at the shared vertex
            shared_ok = (kj == (ki + 1) % ni and hit[1] == 1 and hit[2] == 0) or (
                ki == (kj + 1) % ni and hit[1] == 0 and hit[2] == 1
            )
            if not shared_ok:
                raise DegenerateProjection("adjacent segments cross")
            continue
        if hit is None:
            continue
        if hit[0] == "overlap":
            raise DegenerateProjection("collinear overlap")
        _, t, u = hit
        if t in (0, 1) or u in (0, 1):
            raise DegenerateProjection("crossing at a projected vertex")
        x3 = a + (b - a).scale(t)
        y3 = c + (e - c).scale(u)
        dx, dy = x3.dot(dv), y3.dot(dv)
        if dx == dy:
            raise DegenerateProjection("curves meet in space")
        pt2 = (p[0] + (q[0] - p[0]) * t, p[1] + (q[1] - p[1]) * t)
        if pt2 in seen_points:
            raise DegenerateProjection("triple point")
        seen_points[pt2] = True
        dir_i = _sub2(q, p)
        dir_j = _sub2(s, r)
        if dx > dy:
            over, under = (ci, ki + t, dir_i), (cj, kj + u, dir_j)
        else:
            over, under = (cj, kj + u, dir_j), (ci, ki + t, dir_i)
        sign = 1 if _cross2(over[2], under[2]) > 0 else -1
        raw.append((over, under, sign))
    return raw


def _assemble(raw, direction, n_components: int = 1) -> KnotDiagram:
    passages = []
    for idx, (over, under, sign) in enumerate(raw):
        passages.append((over[0], over[1], idx, "O"))
        passages.append((under[0], under[1], idx, "U"))
    passages.sort()
    relabel = {}
    for _, _, idx, _ in passages:
        if idx not in relabel:
            relabel[idx] = len(relabel) + 1
    crossings = sorted(
        (
            Crossing(
                relabel[idx],
                Fraction(over[1]),
                Fraction(under[1]),
                sign,
                over[0],
                under[0],
            )
            for idx, (over, under, sign) in enumerate(raw)
        ),
        key=lambda c: c.label,
    )
    gauss = tuple((relabel[idx], kind) for _, _, idx, kind in passages)
    pd = _pd_code(passages, raw, relabel) if n_components == 1 else ()
    return KnotDiagram(direction, tuple(crossings), gauss, pd)


def _pd_code(passages, raw, relabel):
    m = len(passages)
    if m == 0:
        return ()
    enter = {}
    for k, (_, _, idx, kind) in enumerate(passages):
        enter[(idx, kind)] = k  # incoming edge is k (1-based: k), outgoing k+1
    codes = []
    for idx, (over, under, sign) in enumerate(raw):
        ku = enter[(idx, "U")]
        ko = enter[(idx, "O")]
        u_in, u_out = _edge_before(ku, m), ku + 1
        o_in, o_out = _edge_before(ko, m), ko + 1
        # counterclockwise from the incoming under-strand
        if sign > 0:
            codes.append((relabel[idx], (u_in, o_out, u_out, o_in)))
        else:
            codes.append((relabel[idx], (u_in, o_in, u_out, o_out)))
    return tuple(c for _, c in sorted(codes))


def _edge_before(k: int, m: int) -> int:
    # edge e runs from passage e-1 to passage e; passage 0 is entered by edge m
    return k if k > 0 else m


def generic_projection(
    vertices: Sequence[RationalPoint3],
    bound: int = 7,
    skip: int = 0,
) -> KnotDiagram:
    """Diagram from the ``skip``-th accepted direction of the search."""
    accepted = 0
    for d in direction_candidates(bound):
        try:
            raw = _diagram([vertices], d)
        except DegenerateProjection:
            continue
        if accepted == skip:
            return _assemble(raw, d)
        accepted += 1
    raise DegenerateProjection(f"no generic direction with max-norm <= {bound}")


def projection_along(vertices, direction) -> KnotDiagram:
    return _assemble(_diagram([vertices], tuple(direction)), tuple(direction))


def accepted_directions(vertices, count: int, bound: int = 7) -> list[tuple[int, int, int]]:
    out = []
    for d in direction_candidates(bound):
        try:
            _diagram([vertices], d)
        except DegenerateProjection:
            continue
        out.append(d)
        if len(out) == count:
            break
    return out


# --- invariants -------------------------------------------------------------


def bracket_from_pd(pd: Sequence[tuple[int, int, int, int]], max_crossings: int = 16) -> LaurentPolynomial:
    """Kauffman bracket <D> by the 2^c state sum, normalized so <O> = 1.

    For ``X[i,j,k,l]`` (counterclockwise from the incoming under-strand) the
    A-smoothing joins ``(i,j)(k,l)`` and the B-smoothing ``(i,l)(j,k)``.
    """
    c = len(pd)
    if c > max_crossings:
        raise ValueError(
            f"{c} crossings exceeds the state-sum bound {max_crossings}; "
            "search for a projection direction with fewer crossings"
        )
    if c == 0:
        return LaurentPolynomial({0: 1})
    labels = sorted({e for x in pd for e in x})
    index = {e: n for n, e in enumerate(labels)}
    total = LaurentPolynomial()
    loop_powers: dict[int, LaurentPolynomial] = {}
    for state in range(1 << c):
        parent = list(range(len(labels)))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        def join(x, y):
            rx, ry = find(index[x]), find(index[y])
            if rx != ry:
                parent[rx] = ry

        n_a = 0
        for bit, (i, j, k, l) in enumerate(pd):
            if state >> bit & 1:
                join(i, l)
                join(j, k)
            else:
                n_a += 1
                join(i, j)
                join(k, l)
        loops = len({find(x) for x in range(len(labels))})
        if loops not in loop_powers:
            loop_powers[loops] = LOOP ** (loops - 1)
        total = total + LaurentPolynomial.monomial(n_a - (c - n_a)) * loop_powers[loops]
    return total


def writhe_from_pd(pd) -> int:
    """Sign rule for PD codes with consecutively numbered edges."""
    m = 2 * len(pd)
    w = 0
    for i, j, k, l in pd:
        if (l - j) % m == 1:
            w -= 1
        elif (j - l) % m == 1:
            w += 1
        else:
            raise ValueError("over-strand labels are not consecutive")
    return w


def normalized_bracket(bracket: LaurentPolynomial, writhe: int) -> LaurentPolynomial:
    # (-A^3)^(-w)
    factor = LaurentPolynomial.monomial(-3 * writhe, -1 if writhe % 2 else 1)
    return factor * bracket


def kauffman_bracket(d: KnotDiagram, normalize: bool = True, max_crossings: int = 16) -> LaurentPolynomial:
    """Bracket of the diagram in the variable A, writhe-normalized by default."""
    b = bracket_from_pd(d.pd_code, max_crossings)
    return normalized_bracket(b, d.writhe) if normalize else b


def jones_polynomial(d: KnotDiagram, max_crossings: int = 16) -> LaurentPolynomial:
    """Jones polynomial in t, via A = t^(-1/4)."""
    f = kauffman_bracket(d, True, max_crossings)
    return f.mirror().substitute_power(4)


def jones_from_pd(pd) -> LaurentPolynomial:
    f = normalized_bracket(bracket_from_pd(pd), writhe_from_pd(pd))
    return f.mirror().substitute_power(4)


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def coloring_matrix(d: KnotDiagram) -> list[list[int]]:
    """Fox coloring matrix: one row per crossing, ``2*over - under_in - under_out``."""
    n = len(d.crossings)
    arc_of_passage = []
    arc = 0
    # the arc index increments after each under-passage
    for label, kind in d.gauss_code:
        arc_of_passage.append(arc)
        if kind == "U":
            arc = (arc + 1) % n
    rows = []
    for c in d.crossings:
        row = [0] * n
        for pos, (label, kind) in enumerate(d.gauss_code):
            if label != c.label:
                continue
            if kind == "O":
                row[arc_of_passage[pos]] += 2
            else:
                row[arc_of_passage[pos]] -= 1
                row[(arc_of_passage[pos] + 1) % n] -= 1
        rows.append(row)
    return rows


def knot_determinant(d: KnotDiagram) -> int:
    """|Alexander(-1)|: absolute value of any first minor of the coloring matrix."""
    n = len(d.crossings)
    if n == 0:
        return 1
    m = coloring_matrix(d)
    minor = [row[1:] for row in m[1:]]
    return abs(_bareiss_det(minor))


def is_chiral_jones(j: LaurentPolynomial) -> bool:
    return j.mirror() != j


def linking_number(a: Sequence[RationalPoint3], b: Sequence[RationalPoint3], bound: int = 7):
    """Linking number of two disjoint closed polygons, or None if they meet."""
    sa = [Segment3(a[k], a[(k + 1) % len(a)]) for k in range(len(a))]
    sb = [Segment3(b[k], b[(k + 1) % len(b)]) for k in range(len(b))]
    if any(segment_intersection(s, t).kind != "empty" for s in sa for t in sb):
        return None
    for d in direction_candidates(bound):
        try:
            raw = _diagram([a, b], d)
        except DegenerateProjection:
            continue
        total = sum(sign for over, under, sign in raw if over[0] != under[0])
        return total // 2
    raise DegenerateProjection(f"no generic direction with max-norm <= {bound}")


def transform_curve(iso: CubeIsometry, vertices: Iterable[RationalPoint3]) -> list[RationalPoint3]:
    return [apply_isometry(iso, p) for p in vertices]
