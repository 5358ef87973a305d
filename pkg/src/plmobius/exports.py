"""Canonical text exports: meshes, graphs, the Euler square and knot codes.

Every writer returns a string; byte-identical output for identical input
is part of the contract.
"""

from __future__ import annotations

from fractions import Fraction

from . import knots
from .curves import all_canonical_curves
from .exactgeom import RationalPoint3, format_coord
from .factorizations import (
    canonical_rainbow_factorization,
    euler_square,
    parallel_factorization,
    project_factorizations,
)
from .embeddings import factorization_to_dot
from .polylink import hollow_triangles
from .strips import all_strips, build_mesh


def coord_text(c: Fraction) -> str:
    try:
        return format_coord(Fraction(c))
    except ValueError:
        return str(Fraction(c))


def point_text(p: RationalPoint3) -> str:
    return " ".join(coord_text(c) for c in p)


def off_text(vertices, faces) -> str:
    lines = ["OFF", f"{len(vertices)} {len(faces)} 0"]
    lines += [point_text(v) for v in vertices]
    lines += [f"{len(f)} " + " ".join(str(i) for i in f) for f in faces]
    return "\n".join(lines) + "\n"


def obj_text(vertices, faces, name: str = "") -> str:
    lines = [f"o {name}"] if name else []
    lines += ["v " + point_text(v) for v in vertices]
    lines += ["f " + " ".join(str(i + 1) for i in f) for f in faces]
    return "\n".join(lines) + "\n"


def strip_meshes() -> dict[int, tuple]:
    return {i: (m.vertices, m.triangles) for i, m in ((i, build_mesh(f)) for i, f in all_strips().items())}


def hollow_triangle_meshes() -> dict[int, tuple]:
    out = {}
    for i, h in hollow_triangles().items():
        verts = tuple(h.outer.vertices) + tuple(h.inner.vertices)
        out[i] = (verts, tuple(h.annulus_triangles()))
    return out


def gauss_codes_text() -> str:
    lines = []
    for i, c in all_canonical_curves().items():
        d = knots.generic_projection(c.vertices)
        v = knots.jones_polynomial(d)
        lines.append(f"C{i} direction {' '.join(str(x) for x in d.direction)}")
        lines.append(f"  gauss {d.gauss_text()}")
        lines.append(f"  pd {' '.join('X[' + ','.join(str(a) for a in x) + ']' for x in d.pd_code)}")
        lines.append(f"  writhe {d.writhe} determinant {knots.knot_determinant(d)} jones {v.to_string('t')}")
    return "\n".join(lines) + "\n"


def export_files(kind: str) -> dict[str, str]:
    """File name -> contents for one export kind."""
    if kind == "mesh-off":
        out = {f"strip_M{i}.off": off_text(*m) for i, m in strip_meshes().items()}
        out.update({f"hollow_T{i}.off": off_text(*m) for i, m in hollow_triangle_meshes().items()})
        return out
    if kind == "mesh-obj":
        out = {f"strip_M{i}.obj": obj_text(*m, name=f"M{i}") for i, m in strip_meshes().items()}
        out.update({f"hollow_T{i}.obj": obj_text(*m, name=f"T{i}") for i, m in hollow_triangle_meshes().items()})
        return out
    if kind == "graph-dot":
        f = canonical_rainbow_factorization()
        p = parallel_factorization()
        rep = project_factorizations(f, p)
        return {
            "F.dot": factorization_to_dot(f, "F"),
            "P.dot": factorization_to_dot(p, "P"),
            "Fstar.dot": factorization_to_dot(rep.fstar, "Fstar"),
            "Pstar.dot": factorization_to_dot(rep.pstar, "Pstar"),
        }
    if kind == "euler-csv":
        f = canonical_rainbow_factorization()
        rep = project_factorizations(f, parallel_factorization())
        return {"euler_square.csv": euler_square(rep.fstar, rep.pstar).as_csv()}
    if kind == "gauss-codes":
        return {"gauss_codes.txt": gauss_codes_text()}
    raise ValueError(f"unknown export kind {kind!r}")


EXPORT_KINDS = ("mesh-off", "mesh-obj", "graph-dot", "euler-csv", "gauss-codes")
