"""One-factorizations of the 4-cube and of its antipodal quotient K4,4.

Vertex ``l`` of Q4 is the bit vector ``(x1, x2, x3, x4)`` with
``l = x1 + 2 x2 + 4 x3 + 8 x4``; direction ``k`` flips bit ``k``.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .strips import CubeQ, derive_cube_bicoloring

COLORS = (1, 2, 3, 4)
TAGS = ((1, 2, 3, 4), (1, 3, 2, 4), (1, 2, 4, 3))
# plane pairs: tag by the pair of directions spanning the 4-cycle
PRINTED_TYPE_PLANES = {
    (1, 2, 3, 4): ((1, 2), (3, 4)),
    (1, 3, 2, 4): ((1, 3), (2, 4)),
    (1, 2, 4, 3): ((2, 3), (1, 4)),
}
V0 = (0, 3, 5, 6)
V1 = (1, 2, 4, 7)
# rows V0, columns V1; each entry is (P* color, F* color)
PRINTED_EULER = {
    0: ("12", "23", "34", "41"),
    3: ("21", "14", "43", "32"),
    5: ("33", "42", "11", "24"),
    6: ("44", "31", "22", "13"),
}


def edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    vertices: tuple
    edges: tuple

    def neighbors(self, v) -> list:
        return sorted(b if a == v else a for a, b in self.edges if v in (a, b))

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u, v) -> bool:
        return edge(u, v) in set(self.edges)


@dataclass(frozen=True)
class HypercubeGraph(Graph):
    dimension: int = 4

    def direction(self, u: int, v: int) -> int:
        x = u ^ v
        if x == 0 or x & (x - 1):
            raise ValueError(f"{u} and {v} are not adjacent")
        return x.bit_length()

    def four_cycles(self) -> list[tuple[tuple[int, int], tuple[int, int, int, int]]]:
        """((a, b), (v, v^a, v^a^b, v^b)) for every square, base ``v`` with bits a, b clear."""
        out = []
        for a, b in itertools.combinations(range(1, self.dimension + 1), 2):
            ba, bb = 1 << (a - 1), 1 << (b - 1)
            for v in self.vertices:
                if v & ba or v & bb:
                    continue
                out.append(((a, b), (v, v ^ ba, v ^ ba ^ bb, v ^ bb)))
        return out

    def is_bipartite_by_parity(self) -> bool:
        return all(bin(u).count("1") % 2 != bin(v).count("1") % 2 for u, v in self.edges)


def build_q4() -> HypercubeGraph:
    verts = tuple(range(16))
    edges = tuple(sorted(edge(v, v ^ (1 << k)) for v in verts for k in range(4) if not v & (1 << k)))
    return HypercubeGraph(verts, edges, 4)


def build_k44() -> Graph:
    return Graph(V0 + V1, tuple(sorted(edge(a, b) for a in V0 for b in V1)))


@dataclass(frozen=True)
class OneFactorization:
    graph: Graph
    colors: tuple  # aligned with graph.edges

    def color(self, u, v) -> int:
        return self.colors[self.graph.edges.index(edge(u, v))]

    def as_dict(self) -> dict:
        return dict(zip(self.graph.edges, self.colors))

    def factor(self, c: int) -> list:
        return [e for e, k in zip(self.graph.edges, self.colors) if k == c]

    def problems(self) -> list[str]:
        out = []
        n = len(self.graph.vertices)
        for c in COLORS:
            f = self.factor(c)
            covered = [v for e in f for v in e]
            if len(f) != n // 2 or len(set(covered)) != n:
                out.append(f"color {c} is not a perfect matching")
        for v in self.graph.vertices:
            seen = sorted(self.color(v, w) for w in self.graph.neighbors(v))
            if seen != list(COLORS):
                out.append(f"vertex {v} sees colors {seen}")
        return out

    def is_valid(self) -> bool:
        return not self.problems()

    def recolored(self, perm: dict) -> "OneFactorization":
        return OneFactorization(self.graph, tuple(perm[c] for c in self.colors))


def parallel_factorization(q: HypercubeGraph | None = None) -> OneFactorization:
    q = q or build_q4()
    return OneFactorization(q, tuple(q.direction(u, v) for u, v in q.edges))


def _q3_label(p) -> int:
    return sum(1 << k for k in range(3) if p[k] == Fraction(5, 2))


@dataclass(frozen=True)
class BicoloringResult:
    factorization: OneFactorization | None
    reading: str  # "first->inner" or "first->outer"
    failures: tuple = ()


def _force(bicolor: dict, first_inner: bool) -> tuple[dict | None, str | None]:
    col = {}
    for (a, b), (first, second) in bicolor.items():
        inner, outer = (first, second) if first_inner else (second, first)
        col[edge(a, b)] = inner
        col[edge(a + 8, b + 8)] = outer
    for v in range(8):
        seen_in = {c for e, c in col.items() if v in e and max(e) < 8}
        seen_out = {c for e, c in col.items() if v + 8 in e and min(e) >= 8}
        miss_in = set(COLORS) - seen_in
        miss_out = set(COLORS) - seen_out
        if len(seen_in) != 3 or len(seen_out) != 3 or miss_in != miss_out:
            return None, f"vertex {v}: inner misses {sorted(miss_in)}, outer misses {sorted(miss_out)}"
        col[edge(v, v + 8)] = miss_in.pop()
    return col, None


def rainbow_factorization_from_bicoloring(cube: CubeQ | None = None) -> BicoloringResult:
    """First color of each ordered bicolor on the inner Q3, second on the outer;
    direction-4 edges take the one color missing at both ends.  The swapped
    reading is tried when the first one cannot be forced."""
    cube = cube or derive_cube_bicoloring()
    bicolor = {
        (_q3_label(e.segment[0]), _q3_label(e.segment[1])): (e.trapezoid_color, e.parallelogram_color)
        for e in cube.edges
    }
    q = build_q4()
    failures = []
    for reading, first_inner in (("first->inner", True), ("first->outer", False)):
        col, err = _force(bicolor, first_inner)
        if col is None:
            failures.append(f"{reading}: {err}")
            continue
        f = OneFactorization(q, tuple(col[e] for e in q.edges))
        if f.is_valid():
            return BicoloringResult(f, reading, tuple(failures))
        failures.append(f"{reading}: {f.problems()[0]}")
    return BicoloringResult(None, "", tuple(failures))


def both_bicoloring_readings(cube: CubeQ | None = None) -> dict[str, OneFactorization | None]:
    cube = cube or derive_cube_bicoloring()
    bicolor = {
        (_q3_label(e.segment[0]), _q3_label(e.segment[1])): (e.trapezoid_color, e.parallelogram_color)
        for e in cube.edges
    }
    q = build_q4()
    out = {}
    for reading, first_inner in (("first->inner", True), ("first->outer", False)):
        col, _ = _force(bicolor, first_inner)
        f = OneFactorization(q, tuple(col[e] for e in q.edges)) if col else None
        out[reading] = f if f and f.is_valid() else None
    return out


def cycle_colors(f: OneFactorization, cycle: Sequence[int]) -> tuple[int, ...]:
    n = len(cycle)
    return tuple(f.color(cycle[k], cycle[(k + 1) % n]) for k in range(n))


def is_rainbow_square(f: OneFactorization, cycle: Sequence[int]) -> bool:
    return len(set(cycle_colors(f, cycle))) == 4


def is_q2_rainbow(f: OneFactorization) -> bool:
    if not isinstance(f.graph, HypercubeGraph):
        return all(is_rainbow_square(f, c) for c in k44_four_cycles())
    return all(is_rainbow_square(f, c) for _, c in f.graph.four_cycles())


def rainbow_count(f: OneFactorization) -> int:
    return sum(is_rainbow_square(f, c) for _, c in f.graph.four_cycles())


def enumerate_rainbow_factorizations(limit: int | None = None) -> list[OneFactorization]:
    """Every proper 4-edge-coloring of Q4 with all squares rainbow.

    Edges are colored in lexicographic order; a square is checked as soon
    as its last edge gets a color.
    """
    q = build_q4()
    edges = q.edges
    index = {e: k for k, e in enumerate(edges)}
    squares = []
    for _, c in q.four_cycles():
        squares.append(tuple(index[edge(c[k], c[(k + 1) % 4])] for k in range(4)))
    closing: dict[int, list] = {}
    for sq in squares:
        closing.setdefault(max(sq), []).append(sq)
    colors = [0] * len(edges)
    at_vertex = {v: set() for v in q.vertices}
    out: list[OneFactorization] = []

    def step(k: int) -> bool:
        if k == len(edges):
            out.append(OneFactorization(q, tuple(colors)))
            return limit is not None and len(out) >= limit
        u, v = edges[k]
        for c in COLORS:
            if c in at_vertex[u] or c in at_vertex[v]:
                continue
            colors[k] = c
            if all(len({colors[i] for i in sq}) == 4 for sq in closing.get(k, ())):
                at_vertex[u].add(c)
                at_vertex[v].add(c)
                stop = step(k + 1)
                at_vertex[u].discard(c)
                at_vertex[v].discard(c)
                if stop:
                    return True
        colors[k] = 0
        return False

    step(0)
    return out


def membership(f: OneFactorization, family: Iterable[OneFactorization]) -> str | None:
    """"exact", "color permutation", or None."""
    fam = list(family)
    if any(g.colors == f.colors for g in fam):
        return "exact"
    keys = {g.colors for g in fam}
    for perm in itertools.permutations(COLORS):
        if f.recolored(dict(zip(COLORS, perm))).colors in keys:
            return "color permutation"
    return None


# --- color types -----------------------------------------------------------------


def cyclic_tag(seq: Sequence[int]) -> tuple[int, ...]:
    """Lexicographically least rotation or reversal."""
    s = list(seq)
    n = len(s)
    forms = [tuple(s[r:] + s[:r]) for r in range(n)]
    forms += [tuple(reversed(x)) for x in forms]
    return min(forms)


def tag_name(tag: Sequence[int]) -> str:
    return "(" + "".join(str(c) for c in tag) + ")"


@dataclass(frozen=True)
class CycleClassification:
    counts: dict
    by_plane: dict  # (a, b) -> Counter of tags
    non_rainbow: tuple = ()

    def plane_rule_holds(self) -> bool:
        for tag, planes in PRINTED_TYPE_PLANES.items():
            for plane in planes:
                if dict(self.by_plane[plane]) != {tag: 4}:
                    return False
        return True


def classify_four_cycles(f: OneFactorization) -> CycleClassification:
    q = f.graph
    counts: Counter = Counter()
    by_plane: dict = {}
    bad = []
    for plane, c in q.four_cycles():
        seq = cycle_colors(f, c)
        if len(set(seq)) != 4:
            bad.append(c)
            continue
        tag = cyclic_tag(seq)
        counts[tag] += 1
        by_plane.setdefault(plane, Counter())[tag] += 1
    if bad:
        raise ValueError(f"non-rainbow 4-cycles: {bad[:3]}")
    return CycleClassification(dict(counts), by_plane, tuple(bad))


# --- 2-factors -----------------------------------------------------------------


def cycle_decomposition(graph_edges: Iterable[tuple]) -> list[tuple]:
    """Cycles of a 2-regular edge set, each starting at its least vertex."""
    adj: dict = {}
    for u, v in graph_edges:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if any(len(n) != 2 for n in adj.values()):
        raise ValueError("edge set is not 2-regular")
    seen = set()
    out = []
    for start in sorted(adj):
        if start in seen:
            continue
        cyc = [start]
        seen.add(start)
        prev, cur = start, min(adj[start])
        while cur != start:
            cyc.append(cur)
            seen.add(cur)
            nxt = [w for w in adj[cur] if w != prev]
            prev, cur = cur, nxt[0] if nxt else adj[cur][0]
        out.append(tuple(cyc))
    return out


def two_factor_union(f: OneFactorization, c1: int, c2: int) -> list[tuple]:
    if c1 == c2:
        raise ValueError("two distinct colors are needed")
    return cycle_decomposition(f.factor(c1) + f.factor(c2))


def subpaths(cycle: Sequence[int], length: int = 4) -> list[tuple]:
    n = len(cycle)
    return [tuple(cycle[(s + k) % n] for k in range(length + 1)) for s in range(n)]


def antipodal_subpaths(cycle: Sequence[int]) -> bool:
    return all(p[0] ^ p[-1] == 15 for p in subpaths(cycle))


def subpath_directions_distinct(cycle: Sequence[int]) -> bool:
    return all(
        len({(p[k] ^ p[k + 1]).bit_length() for k in range(4)}) == 4 for p in subpaths(cycle)
    )


def eight_cycles(q: HypercubeGraph | None = None) -> list[tuple]:
    """All 8-cycles of Q4, each once: least vertex first, smaller neighbor second."""
    q = q or build_q4()
    adj = {v: q.neighbors(v) for v in q.vertices}
    out = []

    def grow(path, used):
        if len(path) == 8:
            if path[0] in adj[path[-1]] and path[1] < path[-1]:
                out.append(tuple(path))
            return
        for w in adj[path[-1]]:
            if w > path[0] and w not in used:
                used.add(w)
                path.append(w)
                grow(path, used)
                path.pop()
                used.discard(w)

    for s in q.vertices:
        grow([s], {s})
    return out


def doubled_two_factors(f: OneFactorization, tag: Sequence[int]) -> list[tuple[tuple, tuple]]:
    """2-factors of two 8-cycles each colored by the doubled sequence ``tag^2``."""
    want = cyclic_tag(tuple(tag) * 2)
    cands = [c for c in eight_cycles(f.graph) if cyclic_tag(cycle_colors(f, c)) == want]
    out = []
    for a, b in itertools.combinations(cands, 2):
        if not set(a) & set(b):
            out.append((a, b))
    return out


def rainbow_family_checks(f: OneFactorization) -> dict:
    q = f.graph
    families: dict = {}
    for plane, c in q.four_cycles():
        families.setdefault(plane, []).append(cycle_colors(f, c))
    latin = {}
    for plane, rows in families.items():
        cols_ok = all(sorted(r[p] for r in rows) == list(COLORS) for p in range(4))
        rows_ok = all(sorted(r) == list(COLORS) for r in rows)
        latin[plane] = rows_ok and cols_ok
    doubled = {}
    for tag in TAGS:
        pairs = doubled_two_factors(f, tag)
        doubled[tag_name(tag)] = {
            "two_factors": len(pairs),
            "antipodal_subpaths": all(antipodal_subpaths(c) for pair in pairs for c in pair),
        }
    return {
        "families": len(families),
        "cycles": sum(len(r) for r in families.values()),
        "latin": latin,
        "doubled": doubled,
    }


def two_factor_report(f: OneFactorization) -> dict:
    out = {}
    for c1, c2 in itertools.combinations(COLORS, 2):
        cycles = two_factor_union(f, c1, c2)
        out[(c1, c2)] = {
            "lengths": sorted(len(c) for c in cycles),
            "antipodal_subpaths": all(antipodal_subpaths(c) for c in cycles if len(c) == 8),
            "four_directions": all(subpath_directions_distinct(c) for c in cycles if len(c) == 8),
        }
    return out


# --- antipodal quotient --------------------------------------------------------------


def antipode(v: int) -> int:
    return v ^ 15


def rho(v: int) -> int:
    """Antipodal projection: the representative of ``{v, 15 - v}`` in 0..7."""
    return v if v < 8 else antipode(v)


def rho_plus_eight(v: int) -> int:
    """The literal ``{l, l + 8} -> l`` identification, kept for comparison."""
    return v & 7


@dataclass(frozen=True)
class Quotient:
    graph: Graph
    preimages: dict  # quotient edge -> list of Q4 edges
    loops: int = 0


def quotient_by(projection, q: HypercubeGraph | None = None) -> Quotient:
    q = q or build_q4()
    pre: dict = {}
    loops = 0
    for u, v in q.edges:
        a, b = projection(u), projection(v)
        if a == b:
            loops += 1
            continue
        pre.setdefault(edge(a, b), []).append((u, v))
    verts = tuple(sorted({projection(v) for v in q.vertices}))
    return Quotient(Graph(verts, tuple(sorted(pre))), pre, loops)


def antipodal_quotient() -> Quotient:
    return quotient_by(rho)


def is_k44(g: Graph) -> bool:
    return set(g.edges) == set(build_k44().edges)


def antipode_violations(f: OneFactorization) -> list[tuple]:
    bad = []
    for u, v in f.graph.edges:
        e2 = edge(antipode(u), antipode(v))
        if f.color(u, v) != f.color(*e2) and (u, v) < e2:
            bad.append(((u, v), e2))
    return bad


def project(f: OneFactorization, quotient: Quotient | None = None) -> OneFactorization:
    quotient = quotient or antipodal_quotient()
    bad = antipode_violations(f)
    if bad:
        raise ValueError(f"antipodal edges {bad[0][0]} and {bad[0][1]} differ in color")
    k = build_k44()
    colors = tuple(f.color(*quotient.preimages[e][0]) for e in k.edges)
    return OneFactorization(k, colors)


def k44_four_cycles() -> list[tuple[int, int, int, int]]:
    out = []
    for a0, b0 in itertools.combinations(V0, 2):
        for a1, b1 in itertools.combinations(V1, 2):
            out.append((a0, a1, b0, b1))
    return out


@dataclass(frozen=True)
class ProjectionReport:
    fstar: OneFactorization
    pstar: OneFactorization
    intersections: dict  # (F* color, P* color) -> size
    fstar_rainbow_cycles: int
    pstar_rainbow_cycles: int

    @property
    def orthogonal(self) -> bool:
        return all(n == 1 for n in self.intersections.values()) and len(self.intersections) == 16


def project_factorizations(f: OneFactorization, p: OneFactorization) -> ProjectionReport:
    fs, ps = project(f), project(p)
    inter = {
        (a, b): len(set(fs.factor(a)) & set(ps.factor(b))) for a in COLORS for b in COLORS
    }
    cycles = k44_four_cycles()
    return ProjectionReport(
        fs,
        ps,
        inter,
        sum(is_rainbow_square(fs, c) for c in cycles),
        sum(is_rainbow_square(ps, c) for c in cycles),
    )


# --- Euler square ---------------------------------------------------------------------


@dataclass(frozen=True)
class EulerSquare:
    cells: dict  # (v0, v1) -> (P* color, F* color)

    def grid(self) -> list[list[tuple[int, int]]]:
        return [[self.cells[(r, c)] for c in V1] for r in V0]

    def is_graeco_latin(self) -> bool:
        g = self.grid()
        for k in (0, 1):
            for row in g:
                if sorted(x[k] for x in row) != list(COLORS):
                    return False
            for j in range(4):
                if sorted(g[i][j][k] for i in range(4)) != list(COLORS):
                    return False
        return len(set(self.cells.values())) == 16

    def as_csv(self) -> str:
        lines = [",".join([""] + [str(c) for c in V1])]
        for r in V0:
            lines.append(",".join([str(r)] + [f"{a}{b}" for a, b in (self.cells[(r, c)] for c in V1)]))
        return "\n".join(lines) + "\n"


def euler_square(fstar: OneFactorization, pstar: OneFactorization) -> EulerSquare:
    return EulerSquare({(r, c): (pstar.color(r, c), fstar.color(r, c)) for r in V0 for c in V1})


def printed_euler_square() -> EulerSquare:
    return EulerSquare(
        {(r, c): (int(s[0]), int(s[1])) for r, row in PRINTED_EULER.items() for c, s in zip(V1, row)}
    )


def euler_square_diff(sq: EulerSquare) -> list[dict]:
    printed = printed_euler_square()
    return [
        {"cell": list(k), "printed": list(printed.cells[k]), "computed": list(v)}
        for k, v in sorted(sq.cells.items())
        if printed.cells[k] != v
    ]


# --- automorphisms ------------------------------------------------------------------------


@dataclass(frozen=True)
class HypercubeMap:
    """``x -> pi(x) XOR t``: bit ``k`` of x moves to bit ``perm[k]``."""

    perm: tuple
    flip: int

    def __call__(self, v: int) -> int:
        out = 0
        for k in range(4):
            if v >> k & 1:
                out |= 1 << self.perm[k]
        return out ^ self.flip


def hypercube_maps() -> list[HypercubeMap]:
    return [HypercubeMap(p, t) for p in itertools.permutations(range(4)) for t in range(16)]


def is_automorphism(graph: Graph, mapping) -> bool:
    es = set(graph.edges)
    images = {edge(mapping(u), mapping(v)) for u, v in graph.edges}
    verts = {mapping(v) for v in graph.vertices}
    return images == es and verts == set(graph.vertices)


def color_preserving(f: OneFactorization, mapping, up_to_permutation: bool = False) -> bool:
    perm: dict = {}
    for (u, v), c in zip(f.graph.edges, f.colors):
        d = f.color(mapping(u), mapping(v))
        if not up_to_permutation:
            if d != c:
                return False
        elif perm.setdefault(c, d) != d:
            return False
    return not up_to_permutation or len(set(perm.values())) == 4


def k44_automorphism_count() -> int:
    """Part-preserving and part-swapping bijections, each checked on the edges."""
    k = build_k44()
    count = 0
    for swap in (False, True):
        for p0 in itertools.permutations(V0):
            for p1 in itertools.permutations(V1):
                if swap:
                    m = dict(zip(V0, p1)) | dict(zip(V1, p0))
                else:
                    m = dict(zip(V0, p0)) | dict(zip(V1, p1))
                count += is_automorphism(k, m.__getitem__)
    return count


def automorphism_counts(f: OneFactorization | None = None) -> dict:
    q = build_q4()
    f = f or canonical_rainbow_factorization()
    p = parallel_factorization(q)
    autos = [g for g in hypercube_maps() if is_automorphism(q, g)]
    induced = set()
    for g in autos:
        induced.add(tuple(rho(g(v)) for v in range(8)))
    kernel = [g for g in autos if all(rho(g(v)) == v for v in range(8))]
    return {
        "aut_q4": len(autos),
        "f_strict": sum(color_preserving(f, g) for g in autos),
        "f_up_to_permutation": sum(color_preserving(f, g, True) for g in autos),
        "p_strict": sum(color_preserving(p, g) for g in autos),
        "p_up_to_permutation": sum(color_preserving(p, g, True) for g in autos),
        "induced_on_quotient": len(induced),
        "kernel": len(kernel),
        "aut_k44": k44_automorphism_count(),
    }


def canonical_rainbow_factorization() -> OneFactorization:
    res = rainbow_factorization_from_bicoloring()
    if res.factorization is not None and is_q2_rainbow(res.factorization):
        return res.factorization
    for g in enumerate_rainbow_factorizations():
        if classify_four_cycles(g).plane_rule_holds():
            return g
    raise ValueError("no rainbow factorization matches the type table")
