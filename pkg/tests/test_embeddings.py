import pytest

from plmobius import embeddings as emb
from plmobius import factorizations as fz
from plmobius.surfaces import verify_surface
from test_surfaces import brute_orientable

F = fz.canonical_rainbow_factorization()
TWELVE = emb.twelve_toroidal_subgraphs(F)
K44 = emb.k44_type_complexes(F)


def vertex_walks(fc):
    return [w.vertices for w in fc.faces]


def test_face_type():
    assert emb.face_type((1, 2, 1, 2, 1, 2, 1, 2)) == "(12)^4"
    assert emb.face_type((1, 2, 3, 4, 1, 2, 3, 4)) == "(1234)^2"
    assert emb.face_type((2, 1, 3, 4)) == "(1243)"


def test_cor8_torus():
    fc = emb.type_union_complex(F, (fz.TAGS[0], fz.TAGS[1]))
    r = verify_surface(fc)
    assert r.as_dict() == {"V": 16, "E": 32, "F": 16, "chi": 0, "closed": True,
                           "boundary_components": 0, "orientable": True, "genus": 1}
    assert brute_orientable(vertex_walks(fc))


def test_every_type_pair_is_a_torus():
    assert all(r.is_torus for r in emb.q4_rainbow_pairs(F).values())


def test_all_squares_are_not_a_surface():
    r = verify_surface(emb.all_squares_complex(F))
    assert not r.closed and r.overfull_edges == 32


def test_twelve_subgraphs():
    assert len(TWELVE) == 12
    assert len({s.deleted for s in TWELVE}) == 12
    sigs = sorted(s.signature() for s in TWELVE)
    assert sigs.count("[(1234),(1234)^2,(24)^4]") == 2
    for s in TWELVE:
        assert len(s.deleted) == 8
        assert s.surface.is_torus
        assert (s.surface.n_vertices, s.surface.n_edges, s.surface.n_faces) == (16, 24, 8)
        assert s.census() == {4: 4, 8: 4}
        assert s.completions == 1
        assert brute_orientable(vertex_walks(s.complex))
        assert set(s.deleted).isdisjoint(set(s.complex.ends))


@pytest.mark.parametrize("k", [0, 1, 2])
def test_k44_tori(k):
    c = K44[k]
    assert len(c.projected) == 4 and c.max_coverage == 1
    assert c.surface.is_torus
    assert c.all_rainbow
    assert brute_orientable(vertex_walks(c.complex))


def test_self_dual_rainbow():
    fstar = fz.project(F)
    fc = emb.type_union_complex(F, (fz.TAGS[0], fz.TAGS[1]))
    rep = emb.dual_report(fc, F)
    assert rep.self_dually_rainbow and rep.dual_of_dual
    assert (rep.n_vertices, rep.n_edges) == (16, 32)
    for c in K44:
        assert emb.dual_report(c.complex, fstar).self_dually_rainbow


def test_cor11_duals_are_not_one_factorized():
    # 8-gons become degree-8 dual vertices
    rep = emb.dual_report(TWELVE[0].complex, F)
    assert not rep.dual_is_one_factorization
    assert rep.dual_of_dual


def test_dot_and_json():
    dot = emb.factorization_to_dot(F, "F")
    assert dot.startswith("graph F {") and dot.count(" -- ") == 32
    assert emb.complex_to_json(TWELVE[0].complex).startswith('{"faces": ')
