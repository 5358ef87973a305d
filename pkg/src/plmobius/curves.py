"""The four PL trefoil curves C1..C4 bounding the Möbius strips.

The printed tables are kept verbatim in :data:`PRINTED`; validation and
minimal corrections are computed from them, never edited in place.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import NamedTuple

from .exactgeom import (
    RationalPoint3,
    Segment3,
    Intersection,
    lattice_point,
    midpoint,
    segment_intersection,
)


class RawSegment(NamedTuple):
    """One printed token group ``[start,end]_sub^sup``."""

    start: str
    end: str
    sub: str
    sup: str

    def normalized(self) -> tuple[str, str, int, str, bool]:
        """(start, end, length, letter, swapped); the table for C2 twice prints
        ``_v^2`` where every other entry reads ``_2^v``."""
        if self.sub.isdigit():
            return self.start, self.end, int(self.sub), self.sup, False
        return self.start, self.end, int(self.sup), self.sub, True


def _parse(row: str) -> tuple[RawSegment, ...]:
    out = []
    for tok in row.split():
        body, scripts = tok[1:].split("]")
        start, end = body.split(",")
        sub, sup = scripts[1:].split("^")
        out.append(RawSegment(start, end, sub, sup))
    return tuple(out)


# verbatim from the four curve tables, two printed lines each
PRINTED: dict[int, tuple[RawSegment, ...]] = {
    1: _parse(
        "[103,203]_1^h [203,201]_2^v [201,231]_3^d [231,031]_2^h [031,032]_1^v [032,012]_2^d "
        "[012,312]_3^h [312,310]_2^v [310,320]_1^d [320,120]_2^h [120,123]_3^v [123,103]_2^d"
    ),
    2: _parse(
        "[100,200]_1^h [200,220]_v^2 [220,223]_3^d [223,023]_2^h [023,013]_1^v [013,011]_2^d "
        "[011,311]_3^h [311,331]_v^2 [331,332]_1^d [332,331]_2^h [331,102]_3^v [102,100]_2^d"
    ),
    3: _parse(
        "[133,233]_1^h [233,213]_2^v [213,210]_3^d [210,010]_2^h [010,020]_1^v [020,022]_2^d "
        "[022,322]_3^h [322,302]_2^v [302,301]_1^d [301,101]_2^h [101,131]_3^v [131,133]_2^d"
    ),
    4: _parse(
        "[230,130]_1^h [130,110]_2^v [110,113]_3^d [113,313]_2^h [313,323]_1^v [323,321]_2^d "
        "[321,021]_3^h [021,001]_2^v [001,002]_1^d [002,202]_2^h [202,232]_3^v [232,230]_2^d"
    ),
}

COLORS = {1: "red", 2: "blue", 3: "green", 4: "brown"}
LETTERS = ("h", "v", "d")
DEFAULT_CONVENTION = {"h": 0, "v": 1, "d": 2}


def curve_as_printed(i: int) -> tuple[RawSegment, ...]:
    if i not in PRINTED:
        raise ValueError(f"no curve C{i}")
    return PRINTED[i]


@dataclass(frozen=True)
class CurveValidationError:
    segment_index: int  # 1-based, as in the printed table
    violated_rule: str  # closure | axis | length | direction
    details: str


@dataclass(frozen=True)
class PLCycle:
    segments: tuple[Segment3, ...]
    declared_lengths: tuple[int, ...]
    declared_directions: tuple[str, ...]
    convention: tuple[tuple[str, int], ...] = tuple(DEFAULT_CONVENTION.items())
    owner: int = 0

    @property
    def vertices(self) -> tuple[RationalPoint3, ...]:
        return tuple(s.a for s in self.segments)

    def length(self) -> int:
        total = Fraction(0)
        for s in self.segments:
            total += _axis_length(s)
        return int(total)

    def point_set_contains(self, p: RationalPoint3) -> bool:
        return any(s.contains(p) for s in self.segments)

    def length_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for s in self.segments:
            n = int(_axis_length(s))
            census[n] = census.get(n, 0) + 1
        return dict(sorted(census.items()))

    def as_integer_pairs(self) -> list[list[list[int]]]:
        return [[[int(c) for c in s.a], [int(c) for c in s.b]] for s in self.segments]


def _axis_length(s: Segment3) -> Fraction:
    k = s.axis()
    if k is None:
        raise ValueError(f"segment {s} is not axis-aligned")
    return abs(s.b[k] - s.a[k])


def _conventions():
    # default first so that ties resolve to it
    perms = list(itertools.permutations(range(3)))
    perms.sort(key=lambda p: p != (0, 1, 2))
    return [dict(zip(LETTERS, p)) for p in perms]


def _direction_mismatches(raw, conv) -> int:
    bad = 0
    for r in raw:
        a, b, _, letter, _ = r.normalized()
        s = Segment3(lattice_point(a), lattice_point(b))
        if s.axis() is not None and s.axis() != conv[letter]:
            bad += 1
    return bad


def best_convention(raw) -> dict[str, int]:
    """Letter-to-axis map with fewest direction mismatches; default on ties."""
    return min(_conventions(), key=lambda c: _direction_mismatches(raw, c))


def _check(raw, conv) -> list[CurveValidationError]:
    errors = []
    n = len(raw)
    for k, r in enumerate(raw):
        a, b, length, letter, _ = r.normalized()
        idx = k + 1
        nxt = raw[(k + 1) % n].normalized()[0]
        if b != nxt:
            errors.append(
                CurveValidationError(idx, "closure", f"ends at {b} but next starts at {nxt}")
            )
        if a == b:
            errors.append(CurveValidationError(idx, "axis", "zero-length segment"))
            continue
        s = Segment3(lattice_point(a), lattice_point(b))
        axis = s.axis()
        if axis is None:
            errors.append(
                CurveValidationError(idx, "axis", f"[{a},{b}] changes several coordinates")
            )
            continue
        actual = _axis_length(s)
        if actual != length:
            errors.append(
                CurveValidationError(idx, "length", f"[{a},{b}] has length {actual}, declared {length}")
            )
        if axis != conv[letter]:
            errors.append(
                CurveValidationError(
                    idx, "direction", f"[{a},{b}] varies coordinate {axis + 1}, declared {letter}"
                )
            )
    # consecutive collinear segments break the corner structure
    for k in range(n):
        a1, b1 = raw[k].normalized()[:2]
        a2, b2 = raw[(k + 1) % n].normalized()[:2]
        if b1 != a2 or a1 == b1 or a2 == b2:
            continue
        s1 = Segment3(lattice_point(a1), lattice_point(b1))
        s2 = Segment3(lattice_point(a2), lattice_point(b2))
        if s1.direction.cross(s2.direction).is_zero():
            errors.append(
                CurveValidationError(k + 2 if k + 1 < n else 1, "axis", "collinear with previous segment")
            )
    return errors


def validate_curve(raw, owner: int = 0) -> PLCycle | list[CurveValidationError]:
    """Validate a printed table; return the cycle or every violation found."""
    raw = tuple(raw)
    conv = best_convention(raw)
    errors = _check(raw, conv)
    if errors:
        return errors
    segs = tuple(
        Segment3(lattice_point(r.normalized()[0]), lattice_point(r.normalized()[1])) for r in raw
    )
    return PLCycle(
        segments=segs,
        declared_lengths=tuple(r.normalized()[2] for r in raw),
        declared_directions=tuple(r.normalized()[3] for r in raw),
        convention=tuple(sorted(conv.items(), key=lambda kv: kv[1])),
        owner=owner,
    )


@dataclass(frozen=True)
class Correction:
    segment_index: int
    field: str  # start | end
    printed: str
    corrected: str

    def as_dict(self) -> dict:
        return {
            "segment": self.segment_index,
            "field": self.field,
            "printed": self.printed,
            "corrected": self.corrected,
        }


def _digit_changes(a: str, b: str) -> int:
    return sum(x != y for x, y in zip(a, b))


_LATTICE = ["".join(d) for d in itertools.product("0123", repeat=3)]


def correct_curve(raw, max_window: int = 3) -> tuple[tuple[RawSegment, ...], list[Correction]]:
    """Minimal-digit correction of a printed table.

    Each maximal run of flagged segments keeps its outer endpoints (shared
    with valid neighbours) and its declared lengths and letters; the inner
    vertices are re-chosen from the lattice ``{0..3}^3`` to change the fewest
    printed digits.  Raises if no repair or more than one optimal repair
    exists.
    """
    raw = tuple(raw)
    conv = best_convention(raw)
    bad = sorted({e.segment_index - 1 for e in _check(raw, conv)})
    if not bad:
        return raw, []
    runs: list[list[int]] = []
    for k in bad:
        if runs and runs[-1][-1] == k - 1:
            runs[-1].append(k)
        else:
            runs.append([k])
    fixed = list(raw)
    diffs: list[Correction] = []
    for run in runs:
        if len(run) > max_window:
            raise ValueError(f"run of {len(run)} bad segments exceeds search window")
        first = raw[run[0]].normalized()[0]
        last = raw[run[-1]].normalized()[1]
        best = None
        for inner in itertools.product(_LATTICE, repeat=len(run) - 1):
            path = (first,) + inner + (last,)
            ok = True
            cost = 0
            for j, k in enumerate(run):
                a, b = path[j], path[j + 1]
                _, _, length, letter, _ = raw[k].normalized()
                if a == b:
                    ok = False
                    break
                s = Segment3(lattice_point(a), lattice_point(b))
                if s.axis() != conv[letter] or _axis_length(s) != length:
                    ok = False
                    break
                cost += _digit_changes(raw[k].start, a) + _digit_changes(raw[k].end, b)
            if not ok:
                continue
            if best is None or cost < best[0]:
                best = (cost, [path])
            elif cost == best[0]:
                best[1].append(path)
        if best is None:
            raise ValueError(f"no repair for segments {[k + 1 for k in run]}")
        if len(best[1]) > 1:
            raise ValueError(f"ambiguous repair for segments {[k + 1 for k in run]}")
        path = best[1][0]
        for j, k in enumerate(run):
            r = raw[k]
            new = RawSegment(path[j], path[j + 1], r.sub, r.sup)
            for name, old, val in (("start", r.start, new.start), ("end", r.end, new.end)):
                if old != val:
                    diffs.append(Correction(k + 1, name, old, val))
            fixed[k] = new
    return tuple(fixed), diffs


def canonical_curve(i: int) -> PLCycle:
    fixed, _ = correct_curve(curve_as_printed(i))
    cycle = validate_curve(fixed, owner=i)
    if not isinstance(cycle, PLCycle):
        raise AssertionError(f"corrected C{i} still invalid: {cycle}")
    return cycle


def curve_corrections(i: int) -> list[Correction]:
    return correct_curve(curve_as_printed(i))[1]


def all_canonical_curves() -> dict[int, PLCycle]:
    return {i: canonical_curve(i) for i in PRINTED}


def unit_segment_centers(c: PLCycle) -> frozenset[RationalPoint3]:
    centers = [midpoint(s.a, s.b) for s in c.segments if s.length2() == 1]
    if len(centers) != 3:
        raise ValueError(f"expected three unit segments, found {len(centers)}")
    return frozenset(centers)


@dataclass(frozen=True)
class CurveIntersection:
    points: frozenset = field(default_factory=frozenset)
    overlaps: tuple = ()

    @property
    def dimension(self) -> int:
        if self.overlaps:
            return 1
        return 0 if self.points else -1


def curve_pairwise_intersection(ci: PLCycle, cj: PLCycle) -> CurveIntersection:
    """All 144 segment pairs; any collinear overlap makes the result 1-dimensional."""
    points = set()
    overlaps = []
    for s in ci.segments:
        for t in cj.segments:
            hit: Intersection = segment_intersection(s, t)
            if hit.kind == "point":
                points.add(hit.points[0])
            elif hit.kind == "segment":
                overlaps.append(hit.points)
    if overlaps:
        points -={p for p in points if any(Segment3(a, b).contains(p) for a, b in overlaps)}
    return CurveIntersection(frozenset(points), tuple(sorted(set(overlaps))))
