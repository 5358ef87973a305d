"""Face complexes: closed walks glued along shared edges.

Faces are walks rather than simple cycles, so an 8-cycle that repeats a
color pattern is as good a face as a square.  Edges carry identities of
their own, which keeps duals of multigraph complexes well defined.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence


@dataclass(frozen=True)
class Walk:
    """Closed walk; ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]``."""

    vertices: tuple
    edges: tuple

    def __post_init__(self):
        if len(self.vertices) != len(self.edges) or not self.vertices:
            raise ValueError("a closed walk needs as many edges as vertices")

    def __len__(self):
        return len(self.vertices)

    def canonical(self) -> tuple:
        """Rotation- and reversal-invariant form of the (vertex, edge) sequence."""
        n = len(self.vertices)
        fwd = [(self.vertices[i], self.edges[i]) for i in range(n)]
        # reversed traversal visits v_{i} then the edge before it
        rv = list(reversed(self.vertices))
        re = list(reversed(self.edges))
        bwd = [(rv[i], re[(i + 1) % n]) for i in range(n)]
        best = None
        for seq in (fwd, bwd):
            for r in range(n):
                cand = tuple(repr(x) for x in seq[r:] + seq[:r])
                if best is None or cand < best:
                    best = cand
        return best


def walk_from_vertices(vertices: Sequence) -> Walk:
    """Walk in a simple graph; edges are identified by their sorted endpoints."""
    n = len(vertices)
    edges = tuple(simple_edge(vertices[i], vertices[(i + 1) % n]) for i in range(n))
    return Walk(tuple(vertices), edges)


def simple_edge(u, v) -> tuple:
    return (u, v) if u <= v else (v, u)


@dataclass(frozen=True)
class FaceComplex:
    ends: Mapping[Hashable, tuple]
    faces: tuple

    @classmethod
    def from_vertex_walks(cls, walks: Iterable[Sequence]) -> "FaceComplex":
        faces = tuple(walk_from_vertices(w) for w in walks)
        ends = {e: e for f in faces for e in f.edges}
        return cls(ends, faces)

    def edge_ids(self) -> list:
        return sorted({e for f in self.faces for e in f.edges}, key=repr)

    def vertex_ids(self) -> list:
        return sorted({v for f in self.faces for v in f.vertices}, key=repr)


@dataclass(frozen=True)
class SurfaceReport:
    n_vertices: int
    n_edges: int
    n_faces: int
    euler_characteristic: int
    closed: bool
    boundary_components: int
    orientable: bool
    links_ok: bool
    overfull_edges: int = 0
    genus: int | None = None

    @property
    def is_torus(self) -> bool:
        return self.closed and self.orientable and self.euler_characteristic == 0

    def as_dict(self) -> dict:
        return {
            "V": self.n_vertices,
            "E": self.n_edges,
            "F": self.n_faces,
            "chi": self.euler_characteristic,
            "closed": self.closed,
            "boundary_components": self.boundary_components,
            "orientable": self.orientable,
            "genus": self.genus,
        }


def _edge_uses(fc: FaceComplex):
    uses = defaultdict(list)  # edge -> [(face, position, direction)]
    for fi, f in enumerate(fc.faces):
        n = len(f)
        for i, e in enumerate(f.edges):
            a, b = f.vertices[i], f.vertices[(i + 1) % n]
            u, v = fc.ends[e]
            if {a, b} != {u, v}:
                raise ValueError(f"edge {e} does not join {a} and {b}")
            if u == v:
                raise ValueError("loops are not supported")
            uses[e].append((fi, i, 1 if (a, b) == (u, v) else -1))
    return uses


def _corners(fc: FaceComplex):
    corners = defaultdict(list)  # vertex -> [(face, position, e_in, e_out)]
    for fi, f in enumerate(fc.faces):
        n = len(f)
        for i, v in enumerate(f.vertices):
            corners[v].append((fi, i, f.edges[i - 1], f.edges[i]))
    return corners


def _link_structure(corner_list):
    """Components of the vertex link; each is (is_cycle, ordered corners)."""
    by_edge = defaultdict(list)
    for k, (_, _, e_in, e_out) in enumerate(corner_list):
        by_edge[e_in].append(k)
        by_edge[e_out].append(k)
    seen = set()
    comps = []
    for start in range(len(corner_list)):
        if start in seen:
            continue
        comp = []
        stack = [start]
        while stack:
            k = stack.pop()
            if k in seen:
                continue
            seen.add(k)
            comp.append(k)
            _, _, e_in, e_out = corner_list[k]
            for e in (e_in, e_out):
                stack.extend(j for j in by_edge[e] if j not in seen)
        edges = {corner_list[k][2] for k in comp} | {corner_list[k][3] for k in comp}
        is_cycle = all(len(by_edge[e]) == 2 for e in edges) and len(edges) == len(comp)
        comps.append((is_cycle, comp))
    return comps, by_edge


def orientation_signs(fc: FaceComplex) -> list[int] | None:
    """Coherent face orientations, or None if none exist."""
    uses = _edge_uses(fc)
    adj = defaultdict(list)
    for e, occ in uses.items():
        if len(occ) != 2:
            continue
        (f1, _, d1), (f2, _, d2) = occ
        # shared edge must be traversed oppositely: s1*d1 == -s2*d2
        rel = -d1 * d2
        if f1 == f2:
            if rel != 1:
                return None
            continue
        adj[f1].append((f2, rel))
        adj[f2].append((f1, rel))
    sign: dict[int, int] = {}
    for root in range(len(fc.faces)):
        if root in sign:
            continue
        sign[root] = 1
        queue = deque([root])
        while queue:
            f = queue.popleft()
            for g, rel in adj[f]:
                want = sign[f] * rel
                if g not in sign:
                    sign[g] = want
                    queue.append(g)
                elif sign[g] != want:
                    return None
    return [sign[i] for i in range(len(fc.faces))]


def verify_surface(fc: FaceComplex) -> SurfaceReport:
    """Full surface diagnosis; never raises on a non-surface."""
    uses = _edge_uses(fc)
    counts = {e: len(occ) for e, occ in uses.items()}
    overfull = sum(1 for c in counts.values() if c > 2)
    boundary = [e for e, c in counts.items() if c == 1]
    corners = _corners(fc)
    link_comps = [_link_structure(cl)[0] for cl in corners.values()]
    # one link component per vertex: a disc (cycle) or half-disc (path)
    links_ok = all(len(comps) == 1 for comps in link_comps)
    link_cycles = links_ok and all(comps[0][0] for comps in link_comps)
    closed = overfull == 0 and not boundary and link_cycles
    n_v, n_e, n_f = len(corners), len(counts), len(fc.faces)
    chi = n_v - n_e + n_f
    orientable = overfull == 0 and orientation_signs(fc) is not None
    genus = (2 - chi) // 2 if closed and orientable else None
    return SurfaceReport(
        n_v,
        n_e,
        n_f,
        chi,
        closed,
        _count_boundary_components(fc, boundary),
        orientable,
        links_ok,
        overfull,
        genus,
    )


def _count_boundary_components(fc: FaceComplex, boundary) -> int:
    parent = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in boundary:
        u, v = fc.ends[e]
        parent[find(u)] = find(v)
    return len({find(fc.ends[e][0]) for e in boundary})


def boundary_edges(fc: FaceComplex) -> list:
    uses = _edge_uses(fc)
    return sorted((e for e, occ in uses.items() if len(occ) == 1), key=repr)


@dataclass(frozen=True)
class EmbeddedDual:
    complex: FaceComplex
    #: dual vertex (primal face index) order follows ``primal.faces``
    primal_vertices: tuple = field(default=())

    @property
    def n_vertices(self) -> int:
        return len({v for f in self.complex.faces for v in f.vertices})

    @property
    def n_edges(self) -> int:
        return len(self.complex.ends)


def embedded_dual(fc: FaceComplex) -> EmbeddedDual:
    """Dual complex: faces become vertices, vertex links become faces.

    Dual edge ``e`` keeps the identity of primal edge ``e`` so colorings carry
    over unchanged.  Requires a closed complex.
    """
    report = verify_surface(fc)
    if not report.closed:
        raise ValueError("the dual is only built for closed complexes")
    uses = _edge_uses(fc)
    ends = {}
    for e, occ in uses.items():
        f1, f2 = occ[0][0], occ[1][0]
        if f1 == f2:
            raise ValueError("a face meets itself along an edge; dual would have a loop")
        ends[e] = (min(f1, f2), max(f1, f2))
    faces = []
    primal_vertices = []
    for v, cl in sorted(_corners(fc).items(), key=lambda kv: repr(kv[0])):
        comp = _link_structure(cl)[0][0][1]
        # walk the link cycle: corner -> shared out-edge -> next corner
        order = [comp[0]]
        used_edges = []
        prev_edge = cl[comp[0]][2]
        while True:
            k = order[-1]
            _, _, e_in, e_out = cl[k]
            nxt_edge = e_out if e_in == prev_edge else e_in
            used_edges.append(nxt_edge)
            nxt = next(j for j in comp if j != k and nxt_edge in (cl[j][2], cl[j][3]))
            if nxt == order[0]:
                break
            order.append(nxt)
            prev_edge = nxt_edge
        faces.append(Walk(tuple(cl[k][0] for k in order), tuple(used_edges)))
        primal_vertices.append(v)
    return EmbeddedDual(FaceComplex(ends, tuple(faces)), tuple(primal_vertices))


def same_faces(fc1: FaceComplex, fc2: FaceComplex, vertex_map: Mapping | None = None) -> bool:
    """Equal face multisets up to rotation/reversal, after mapping fc2's vertices."""
    vm = vertex_map or {}

    def mapped(w: Walk) -> Walk:
        return Walk(tuple(vm.get(v, v) for v in w.vertices), w.edges)

    a = sorted(f.canonical() for f in fc1.faces)
    b = sorted(mapped(f).canonical() for f in fc2.faces)
    return a == b


def dual_of_dual_matches(fc: FaceComplex) -> bool:
    d1 = embedded_dual(fc)
    d2 = embedded_dual(d1.complex)
    # vertex k of d2 is face k of d1, the link of primal vertex primal_vertices[k]
    vmap = dict(enumerate(d1.primal_vertices))
    return same_faces(fc, d2.complex, vmap) and set(fc.ends) == set(d2.complex.ends)
