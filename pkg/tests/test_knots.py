import pytest
from hypothesis import given, settings, strategies as st

from plmobius import knots
from plmobius.curves import all_canonical_curves
from plmobius.exactgeom import REFLECT_X1, REFLECT_X3, P, all_isometries
from plmobius.knots import LaurentPolynomial as L

CURVES = all_canonical_curves()
RIGHT_TREFOIL = L({4: -1, 3: 1, 1: 1})

# knot-table PD codes with their published Jones polynomials
TABLE = [
    ([(1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)], L({-4: -1, -3: 1, -1: 1}), 3),
    ([(4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)], L({-2: 1, -1: -1, 0: 1, 1: -1, 2: 1}), 5),
    ([(1, 6, 2, 7), (3, 8, 4, 9), (5, 10, 6, 1), (7, 2, 8, 3), (9, 4, 10, 5)],
     L({-7: -1, -6: 1, -5: -1, -4: 1, -2: 1}), 5),
]


def test_laurent_arithmetic():
    a = L({1: 2, -1: -1})
    assert a * L.monomial(1) == L({2: 2, 0: -1})
    assert (a - a).is_zero()
    assert a.mirror() == L({-1: 2, 1: -1})
    assert L({-4: 1, 8: 2}).substitute_power(-4) == L({1: 1, -2: 2})
    assert (L.monomial(1) + L.monomial(-1)) ** 2 == L({2: 1, 0: 2, -2: 1})


@pytest.mark.parametrize("pd,jones,det", TABLE)
def test_jones_from_table_pd(pd, jones, det):
    j = knots.jones_from_pd(pd)
    assert j == jones
    assert abs(j.evaluate(-1)) == det


def test_unknot_square():
    sq = [P(0, 0, 0), P(1, 0, 0), P(1, 1, 0), P(0, 1, 0)]
    d = knots.generic_projection(sq)
    assert d.crossings == ()
    assert knots.knot_determinant(d) == 1
    assert knots.jones_polynomial(d) == L({0: 1})


@pytest.mark.parametrize("i", [1, 2, 3, 4])
def test_curves_are_right_trefoils(i):
    v = CURVES[i].vertices
    dirs = knots.accepted_directions(v, 4)
    assert len(dirs) == 4
    for d in dirs:
        diag = knots.projection_along(v, d)
        assert knots.jones_polynomial(diag) == RIGHT_TREFOIL
        assert knots.knot_determinant(diag) == 3
        # the Jones value at -1 is the determinant up to sign
        assert abs(knots.jones_polynomial(diag).evaluate(-1)) == 3
    assert knots.is_chiral_jones(RIGHT_TREFOIL)


def test_gauss_and_pd_agree():
    d = knots.generic_projection(CURVES[1].vertices)
    assert d.gauss_text() == "O1+ U2+ O3+ U1+ O2+ U3+"
    assert d.writhe == knots.writhe_from_pd(d.pd_code) == 3
    assert knots.jones_from_pd(d.pd_code) == knots.jones_polynomial(d)


def test_coloring_matrix_rows_sum_to_zero():
    d = knots.generic_projection(CURVES[2].vertices)
    m = knots.coloring_matrix(d)
    assert all(sum(r) == 0 for r in m)


@pytest.mark.parametrize("mirror", [REFLECT_X1, REFLECT_X3])
def test_mirror_negates_exponents(mirror):
    for c in CURVES.values():
        m = knots.transform_curve(mirror, c.vertices)
        assert knots.jones_polynomial(knots.generic_projection(m)) == RIGHT_TREFOIL.mirror()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(all_isometries()), st.sampled_from([1, 2, 3, 4]), st.integers(0, 3))
def test_jones_invariant_under_isometry(g, i, skip):
    v = knots.transform_curve(g, CURVES[i].vertices)
    j = knots.jones_polynomial(knots.generic_projection(v, skip=skip))
    assert j == (RIGHT_TREFOIL if g.is_rotation() else RIGHT_TREFOIL.mirror())


def test_linking_numbers():
    a = [P(0, 0, 0), P(2, 0, 0), P(2, 2, 0), P(0, 2, 0)]
    hopf = [P(1, 1, -1), P(1, 1, 1), P(1, 3, 1), P(1, 3, -1)]
    apart = [P(5, 5, -1), P(5, 5, 1), P(5, 6, 1), P(5, 6, -1)]
    assert abs(knots.linking_number(a, hopf)) == 1
    assert knots.linking_number(a, apart) == 0
    assert knots.linking_number(a, [P(2, 0, 0), P(3, 0, 0), P(3, 1, 0)]) is None


def test_degenerate_direction_is_rejected():
    with pytest.raises(knots.DegenerateProjection):
        knots.projection_along(CURVES[1].vertices, (1, 0, 0))
