"""Toroidal face complexes in Q4 and K4,4 built from the rainbow factorization."""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .factorizations import (
    COLORS,
    PRINTED_TYPE_PLANES,
    TAGS,
    OneFactorization,
    build_k44,
    build_q4,
    canonical_rainbow_factorization,
    cycle_colors,
    cycle_decomposition,
    cyclic_tag,
    edge,
    eight_cycles,
    k44_four_cycles,
    project,
    rho,
    tag_name,
)
from .surfaces import (
    EmbeddedDual,
    FaceComplex,
    SurfaceReport,
    dual_of_dual_matches,
    embedded_dual,
    verify_surface,
)

# the printed signature table: (tag, opposite color pair) per line
PRINTED_SIGNATURES = (
    ((1, 2, 3, 4), (1, 3)),
    ((1, 2, 3, 4), (2, 4)),
    ((1, 2, 4, 3), (1, 4)),
    ((1, 2, 4, 3), (2, 3)),
    ((1, 3, 2, 4), (1, 2)),
    ((1, 3, 2, 4), (3, 4)),
)


def face_type(colors) -> str:
    """Shortest cyclic color word ``w`` with the walk reading ``w^k``."""
    seq = list(colors)
    n = len(seq)
    for p in range(1, n + 1):
        if n % p == 0 and seq == seq[:p] * (n // p):
            word = cyclic_tag(seq[:p]) if p > 2 else tuple(sorted(seq[:p]))
            base = "(" + "".join(str(c) for c in word) + ")"
            return base if p == n else f"{base}^{n // p}"
    raise AssertionError("unreachable")


def squares_of_tag(f: OneFactorization, tag) -> list[tuple[tuple[int, int], tuple]]:
    return [(pl, c) for pl, c in f.graph.four_cycles() if cyclic_tag(cycle_colors(f, c)) == tuple(tag)]


def type_union_complex(f: OneFactorization, tags) -> FaceComplex:
    faces = [c for t in tags for _, c in squares_of_tag(f, t)]
    return FaceComplex.from_vertex_walks(faces)


def all_squares_complex(f: OneFactorization) -> FaceComplex:
    return FaceComplex.from_vertex_walks([c for _, c in f.graph.four_cycles()])


# --- the twelve edge-deleted subgraphs ------------------------------------------------


@dataclass(frozen=True)
class ToroidalSubgraph:
    tag: tuple
    plane: tuple  # directions spanning the family whose edges are deleted
    colors: tuple  # deleted color pair
    deleted: frozenset
    complex: FaceComplex
    surface: SurfaceReport
    face_types: tuple
    completions: int  # number of valid choices for the doubled 8-cycles

    def signature(self) -> str:
        c = sorted(set(COLORS) - set(self.colors))
        return f"[{tag_name(self.tag)},{tag_name(self.tag)}^2,({c[0]}{c[1]})^4]"

    def census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for w in self.complex.faces:
            out[len(w)] = out.get(len(w), 0) + 1
        return dict(sorted(out.items()))


def _edge_multiset(walks) -> dict:
    uses: dict = {}
    for w in walks:
        for k in range(len(w)):
            e = edge(w[k], w[(k + 1) % len(w)])
            uses[e] = uses.get(e, 0) + 1
    return uses


def toroidal_subgraph(f: OneFactorization, tag, plane, colors) -> ToroidalSubgraph:
    """Delete the ``colors`` edges of the ``tag``-squares in ``plane``; face the rest.

    Faces: the other family's ``tag``-squares, the 2-factor of the two
    remaining colors, and a pair of disjoint 8-cycles colored ``tag^2``
    chosen so that every remaining edge lies in exactly two faces.
    """
    tag = tuple(tag)
    planes = PRINTED_TYPE_PLANES[tag]
    other = planes[1] if tuple(plane) == planes[0] else planes[0]
    sq = squares_of_tag(f, tag)
    deleted = frozenset(
        edge(c[k], c[(k + 1) % 4])
        for pl, c in sq
        if pl == tuple(plane)
        for k in range(4)
        if f.color(c[k], c[(k + 1) % 4]) in colors
    )
    remaining = set(f.graph.edges) - deleted
    squares = [c for pl, c in sq if pl == other]
    keep = tuple(sorted(set(COLORS) - set(colors)))
    two_factor = cycle_decomposition(f.factor(keep[0]) + f.factor(keep[1]))
    want = cyclic_tag(tag * 2)
    cands = [
        c
        for c in eight_cycles(f.graph)
        if cyclic_tag(cycle_colors(f, c)) == want
        and all(edge(c[k], c[(k + 1) % 8]) in remaining for k in range(8))
    ]
    base = _edge_multiset(squares + two_factor)
    valid = []
    for a, b in itertools.combinations(cands, 2):
        if set(a) & set(b):
            continue
        uses = dict(base)
        for e, n in _edge_multiset([a, b]).items():
            uses[e] = uses.get(e, 0) + n
        if set(uses) == remaining and all(n == 2 for n in uses.values()):
            valid.append((a, b))
    if not valid:
        raise ValueError(f"no doubled 8-cycles complete {tag_name(tag)} in plane {plane}")
    faces = squares + two_factor + list(valid[0])
    fc = FaceComplex.from_vertex_walks(faces)
    types = tuple(sorted(face_type(cycle_colors(f, w)) for w in faces))
    return ToroidalSubgraph(tag, tuple(plane), tuple(colors), deleted, fc, verify_surface(fc), types, len(valid))


def twelve_toroidal_subgraphs(f: OneFactorization | None = None) -> list[ToroidalSubgraph]:
    f = f or canonical_rainbow_factorization()
    out = []
    for tag, colors in PRINTED_SIGNATURES:
        for plane in PRINTED_TYPE_PLANES[tag]:
            out.append(toroidal_subgraph(f, tag, plane, colors))
    return out


# --- K4,4 ---------------------------------------------------------------------------------


@dataclass(frozen=True)
class K44Complex:
    tag: tuple
    projected: tuple  # the projected squares of the tag
    completion: tuple  # added faces
    complex: FaceComplex | None
    surface: SurfaceReport | None
    max_coverage: int
    covers_found: int
    all_rainbow: bool


def _as_cycle_key(c) -> frozenset:
    return frozenset(edge(c[k], c[(k + 1) % len(c)]) for k in range(len(c)))


def projected_squares(f: OneFactorization, tag) -> list[tuple]:
    seen = {}
    for _, c in squares_of_tag(f, tag):
        img = tuple(rho(v) for v in c)
        seen.setdefault(_as_cycle_key(img), img)
    return [seen[k] for k in sorted(seen, key=lambda k: sorted(k))]


def k44_type_complex(f: OneFactorization, fstar: OneFactorization, tag) -> K44Complex:
    """Complete the projected squares of ``tag`` to a closed torus on K4,4.

    A torus on 8 vertices and 16 edges has 8 faces, so four faces of total
    length 16 must be added; every face has length at least 4, hence the
    search over 4-cycles exhausts facial walks of length up to 8.
    Candidates are tried rainbow first, then lexicographically.
    """
    tag = tuple(tag)
    proj = projected_squares(f, tag)
    cover = _edge_multiset(proj)
    k = build_k44()
    need = {e: 2 - cover.get(e, 0) for e in k.edges}
    cands = [c for c in k44_four_cycles() if _as_cycle_key(c) not in {_as_cycle_key(p) for p in proj}]
    cands.sort(key=lambda c: (len(set(cycle_colors(fstar, c))) != 4, c))
    found = []

    def search(start, chosen, need):
        if all(n == 0 for n in need.values()):
            found.append(tuple(chosen))
            return
        for idx in range(start, len(cands)):
            c = cands[idx]
            es = _as_cycle_key(c)
            if all(need[e] > 0 for e in es):
                for e in es:
                    need[e] -= 1
                chosen.append(c)
                search(idx + 1, chosen, need)
                chosen.pop()
                for e in es:
                    need[e] += 1

    search(0, [], need)
    for comp in found:
        fc = FaceComplex.from_vertex_walks(list(proj) + list(comp))
        rep = verify_surface(fc)
        if rep.is_torus:
            rainbow = all(len(set(cycle_colors(fstar, w))) == 4 for w in list(proj) + list(comp))
            return K44Complex(tag, tuple(proj), comp, fc, rep, max(cover.values()), len(found), rainbow)
    return K44Complex(tag, tuple(proj), (), None, None, max(cover.values()), len(found), False)


def k44_type_complexes(f: OneFactorization | None = None) -> list[K44Complex]:
    f = f or canonical_rainbow_factorization()
    fstar = project(f)
    return [k44_type_complex(f, fstar, t) for t in TAGS]


# --- duals --------------------------------------------------------------------------


@dataclass(frozen=True)
class DualReport:
    n_vertices: int
    n_edges: int
    dual_is_one_factorization: bool
    primal_faces_rainbow: bool
    dual_faces_rainbow: bool
    dual_of_dual: bool

    @property
    def self_dually_rainbow(self) -> bool:
        return self.dual_is_one_factorization and self.primal_faces_rainbow and self.dual_faces_rainbow


def edge_colors(f: OneFactorization, fc: FaceComplex) -> dict:
    return {e: f.color(*fc.ends[e]) for e in fc.ends}


def dual_report(fc: FaceComplex, f: OneFactorization) -> DualReport:
    colors = edge_colors(f, fc)
    dual: EmbeddedDual = embedded_dual(fc)
    d = dual.complex
    at: dict = {}
    for e, (a, b) in d.ends.items():
        at.setdefault(a, []).append(colors[e])
        at.setdefault(b, []).append(colors[e])
    proper = all(sorted(cs) == list(COLORS) for cs in at.values())
    primal_rb = all(len(w) == 4 and len({colors[e] for e in w.edges}) == 4 for w in fc.faces)
    dual_rb = all(len(w) == 4 and len({colors[e] for e in w.edges}) == 4 for w in d.faces)
    return DualReport(dual.n_vertices, dual.n_edges, proper, primal_rb, dual_rb, dual_of_dual_matches(fc))


# --- export -----------------------------------------------------------------------


def complex_to_json(fc: FaceComplex) -> str:
    return json.dumps({"faces": [list(w.vertices) for w in fc.faces]}, sort_keys=True) + "\n"


def factorization_to_dot(f: OneFactorization, name: str = "G", fc: FaceComplex | None = None) -> str:
    palette = {1: "red", 2: "blue", 3: "green", 4: "brown"}
    lines = [f"graph {name} {{"]
    if fc is not None:
        for k, w in enumerate(fc.faces):
            lines.append(f"  // face {k}: {' '.join(str(v) for v in w.vertices)}")
    for (u, v), c in zip(f.graph.edges, f.colors):
        lines.append(f'  {u} -- {v} [color="{palette[c]}", label="{c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def q4_rainbow_pairs(f: OneFactorization | None = None) -> dict:
    """Surface reports for the union of squares of any two types."""
    f = f or canonical_rainbow_factorization()
    out = {}
    for a, b in itertools.combinations(TAGS, 2):
        out[(tag_name(a), tag_name(b))] = verify_surface(type_union_complex(f, (a, b)))
    return out


def k44_graph_edges() -> tuple:
    return build_k44().edges


def q4_graph_edges() -> tuple:
    return build_q4().edges
