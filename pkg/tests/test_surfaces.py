import itertools

from hypothesis import given, settings, strategies as st

from plmobius.surfaces import (
    FaceComplex,
    boundary_edges,
    dual_of_dual_matches,
    embedded_dual,
    orientation_signs,
    verify_surface,
)

TETRAHEDRON = [(0, 1, 2), (0, 3, 1), (0, 2, 3), (1, 3, 2)]
TORUS7 = [tuple((i + d) % 7 for d in ds) for i in range(7) for ds in ((0, 1, 3), (0, 3, 2))]
RP2 = [(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1), (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)]
MOBIUS5 = [(k, (k + 1) % 5, (k + 2) % 5) for k in range(5)]
ANNULUS = [(0, 1, 3), (1, 4, 3), (1, 2, 4), (2, 5, 4), (2, 0, 5), (0, 3, 5)]
CUBE = [(0, 1, 3, 2), (4, 6, 7, 5), (0, 4, 5, 1), (2, 3, 7, 6), (0, 2, 6, 4), (1, 5, 7, 3)]


def brute_orientable(faces) -> bool:
    """Try every choice of face directions; each edge must be used once each way."""
    for signs in itertools.product((1, -1), repeat=len(faces)):
        darts = []
        for f, s in zip(faces, signs):
            w = f if s == 1 else f[::-1]
            darts += [(w[k], w[(k + 1) % len(w)]) for k in range(len(w))]
        if len(set(darts)) == len(darts):
            return True
    return False


def test_sphere():
    r = verify_surface(FaceComplex.from_vertex_walks(TETRAHEDRON))
    assert (r.euler_characteristic, r.closed, r.orientable, r.genus) == (2, True, True, 0)


def test_torus():
    r = verify_surface(FaceComplex.from_vertex_walks(TORUS7))
    assert (r.n_vertices, r.n_edges, r.n_faces) == (7, 21, 14)
    assert r.is_torus and r.genus == 1


def test_projective_plane():
    r = verify_surface(FaceComplex.from_vertex_walks(RP2))
    assert (r.euler_characteristic, r.closed, r.orientable) == (1, True, False)


def test_mobius_band():
    fc = FaceComplex.from_vertex_walks(MOBIUS5)
    r = verify_surface(fc)
    assert (r.euler_characteristic, r.closed, r.orientable, r.boundary_components) == (0, False, False, 1)
    assert len(boundary_edges(fc)) == 5


def test_annulus():
    r = verify_surface(FaceComplex.from_vertex_walks(ANNULUS))
    assert (r.euler_characteristic, r.orientable, r.boundary_components) == (0, True, 2)


def test_orientation_matches_brute_force():
    for faces in (TETRAHEDRON, TORUS7, RP2, MOBIUS5, ANNULUS, CUBE):
        fc = FaceComplex.from_vertex_walks(faces)
        assert (orientation_signs(fc) is not None) == brute_orientable(faces)


def test_overfull_edge_is_not_a_surface():
    r = verify_surface(FaceComplex.from_vertex_walks(TETRAHEDRON + [(0, 1, 4)]))
    assert not r.closed and r.overfull_edges == 1


def test_cube_dual_is_octahedron():
    fc = FaceComplex.from_vertex_walks(CUBE)
    d = embedded_dual(fc)
    assert (d.n_vertices, d.n_edges, len(d.complex.faces)) == (6, 12, 8)
    assert all(len(f) == 3 for f in d.complex.faces)
    assert verify_surface(d.complex).euler_characteristic == 2
    assert dual_of_dual_matches(fc)


def test_torus_dual_is_heawood_map():
    d = embedded_dual(FaceComplex.from_vertex_walks(TORUS7))
    assert d.n_vertices == 14 and all(len(f) == 6 for f in d.complex.faces)
    assert verify_surface(d.complex).is_torus


@settings(max_examples=30)
@given(st.permutations(range(7)), st.sampled_from(["torus", "rp2", "mobius"]))
def test_relabeling_invariance(perm, name):
    faces = {"torus": TORUS7, "rp2": RP2, "mobius": MOBIUS5}[name]
    relabeled = [tuple(perm[v] for v in f) for f in faces]
    a = verify_surface(FaceComplex.from_vertex_walks(faces)).as_dict()
    b = verify_surface(FaceComplex.from_vertex_walks(relabeled)).as_dict()
    assert a == b
