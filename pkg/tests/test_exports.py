import csv
import io
import re
from fractions import Fraction

from plmobius import exports
from plmobius import factorizations as fz


def test_off_strip():
    text = exports.export_files("mesh-off")["strip_M1.off"]
    lines = text.splitlines()
    assert lines[0] == "OFF" and lines[1] == "12 12 0"
    assert all(l.startswith("3 ") for l in lines[14:])
    assert len(lines) == 2 + 12 + 12


def test_off_hollow_triangle_coordinates():
    lines = exports.export_files("mesh-off")["hollow_T1.off"].splitlines()
    assert lines[1] == "6 6 0"
    for row in lines[2:8]:
        for tok in row.split():
            assert re.fullmatch(r"\d+(\.\d{1,2})?", tok)
            assert Fraction(tok) * 4 == int(Fraction(tok) * 4)
    assert "2.25" in lines[5].split()


def test_obj():
    text = exports.export_files("mesh-obj")["strip_M2.obj"]
    lines = text.splitlines()
    assert lines[0] == "o M2"
    assert sum(l.startswith("v ") for l in lines) == 12
    assert sum(l.startswith("f ") for l in lines) == 12
    assert min(int(t) for l in lines if l.startswith("f ") for t in l.split()[1:]) == 1


def test_dot():
    files = exports.export_files("graph-dot")
    assert sorted(files) == ["F.dot", "Fstar.dot", "P.dot", "Pstar.dot"]
    f = files["F.dot"]
    assert f.count(" -- ") == 32
    assert set(re.findall(r'color="(\w+)"', f)) == {"red", "blue", "green", "brown"}
    assert files["Fstar.dot"].count(" -- ") == 16


def test_euler_csv():
    text = exports.export_files("euler-csv")["euler_square.csv"]
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["", "1", "2", "4", "7"]
    cells = {(int(r[0]), int(c)): v for r in rows[1:] for c, v in zip(rows[0][1:], r[1:])}
    assert len(cells) == 16
    assert all(cells[(r, c)] == s for r, row in fz.PRINTED_EULER.items() for c, s in zip(fz.V1, row))


def test_gauss_codes():
    text = exports.export_files("gauss-codes")["gauss_codes.txt"]
    assert text.count("gauss ") == 4
    assert text.count("jones -t^4 +t^3 +t") == 4


def test_deterministic():
    for kind in exports.EXPORT_KINDS:
        assert exports.export_files(kind) == exports.export_files(kind)


def test_unknown_kind():
    import pytest

    with pytest.raises(ValueError):
        exports.export_files("stl")
