import pytest

from plmobius import curves
from plmobius.curves import (
    PRINTED,
    RawSegment,
    all_canonical_curves,
    best_convention,
    correct_curve,
    curve_corrections,
    curve_pairwise_intersection,
    unit_segment_centers,
    validate_curve,
)
from plmobius.exactgeom import P


def test_printed_tables_have_twelve_tokens():
    assert all(len(raw) == 12 for raw in PRINTED.values())


def test_swapped_script_token():
    assert RawSegment("200", "220", "v", "2").normalized() == ("200", "220", 2, "v", True)


@pytest.mark.parametrize("i", [3, 4])
def test_valid_as_printed(i):
    assert isinstance(validate_curve(PRINTED[i]), curves.PLCycle)
    assert curve_corrections(i) == []


def test_c1_letters_are_permuted():
    errs = curves._check(PRINTED[1], curves.DEFAULT_CONVENTION)
    assert sorted(e.segment_index for e in errs) == [2, 3, 5, 6, 8, 9, 11, 12]
    assert {e.violated_rule for e in errs} == {"direction"}
    assert best_convention(PRINTED[1]) == {"h": 0, "v": 2, "d": 1}
    assert isinstance(validate_curve(PRINTED[1]), curves.PLCycle)


def test_c2_errors_and_repair():
    errs = validate_curve(PRINTED[2])
    assert isinstance(errs, list)
    assert {e.segment_index for e in errs} == {10, 11}
    fixed, diff = correct_curve(PRINTED[2])
    assert [c.as_dict() for c in diff] == [
        {"segment": 10, "field": "end", "printed": "331", "corrected": "132"},
        {"segment": 11, "field": "start", "printed": "331", "corrected": "132"},
    ]
    assert isinstance(validate_curve(fixed), curves.PLCycle)


def test_corrupted_table_is_rejected():
    raw = list(PRINTED[3])
    raw[4] = RawSegment("010", "333", "1", "v")
    errs = validate_curve(raw)
    assert isinstance(errs, list) and errs


def test_canonical_curves():
    for i, c in all_canonical_curves().items():
        assert len(c.segments) == 12
        assert c.length() == 24
        assert c.length_census() == {1: 3, 2: 6, 3: 3}
        assert c.segments[-1].b == c.segments[0].a
        assert all(0 <= x <= 3 for v in c.vertices for x in v)


def test_unit_segment_centers_c1():
    c1 = all_canonical_curves()[1]
    assert unit_segment_centers(c1) == {P(1.5, 0, 3), P(3, 1.5, 0), P(0, 3, 1.5)}


def test_curves_meet_in_points():
    cs = all_canonical_curves()
    for i in cs:
        for j in cs:
            if i < j:
                assert curve_pairwise_intersection(cs[i], cs[j]).dimension <= 0
