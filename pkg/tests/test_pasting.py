import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import columns_first, compatible_2x2
from dblcat.constructions import fixture
from dblcat.core import compose_h, compose_v, hid, oid, vid
from dblcat.errors import MalformedGrid
from dblcat.pasting import PastingGrid, check_grid, column, outer_boundary, paste, row

SMALL = ["TERMINAL", "WALKING_ARROW_SQ", "WALKING_ISO_SQ", "DELOOP_QUIN", "TWOGROUP_QUIN",
         "Z2_GROUPOID_QUIN"]


@pytest.mark.parametrize("name", SMALL)
def test_rows_first_equals_columns_first(name):
    d = fixture(name)
    for g in compatible_2x2(d):
        assert paste(d, g) == columns_first(d, g)


POS = fixture("POS2_QUIN")


@st.composite
def grid_2x2(draw, d=POS):
    a = draw(st.sampled_from(sorted(d.squares)))
    ba = d.squares[a]
    b = draw(st.sampled_from(d.by_left[ba.right]))
    c = draw(st.sampled_from(d.by_top[ba.bottom]))
    x = draw(st.sampled_from(d.by_top_left[(d.squares[b].bottom, d.squares[c].right)]))
    return PastingGrid.from_rows([[a, b], [c, x]])


@settings(max_examples=300)
@given(grid_2x2())
def test_rows_first_equals_columns_first_pos2(g):
    assert paste(POS, g) == columns_first(POS, g)
    assert POS.squares[paste(POS, g)] == outer_boundary(POS, g)


@given(grid_2x2())
def test_nested_grid_equals_flat(g):
    a, b, c, x = g.cells
    assert paste(POS, row(column(a, c), column(b, x))) == paste(POS, g)
    assert paste(POS, column(row(a, b), row(c, x))) == paste(POS, g)


def test_identity_grids_evaluate_to_identities():
    for name in SMALL + ["POS2_QUIN"]:
        d = fixture(name)
        for (g2, g1), g in d.v_compose.items():
            assert paste(d, column(vid(d, g1), vid(d, g2))) == vid(d, compose_v(d, g2, g1))
        for (f2, f1), f in d.h_compose.items():
            assert paste(d, row(hid(d, f1), hid(d, f2))) == hid(d, compose_h(d, f2, f1))
        for a in d.objects:
            i = oid(d, a)
            for n, m in itertools.product((1, 2, 3), repeat=2):
                assert paste(d, PastingGrid(n, m, [i] * (n * m))) == i


def test_single_cell_grid():
    s = sorted(POS.squares)[0]
    assert paste(POS, s) == s
    assert paste(POS, row(s)) == s


def test_seam_mismatch_is_reported():
    d = fixture("POS2_QUIN")
    a = hid(d, "!")  # P -> Q
    b = hid(d, "const0")  # Q -> P, so the two meet along 1_Q
    bad = row(hid(d, "id_P"), hid(d, "id_Q"))
    r = check_grid(d, bad)
    assert r.families == ["grid_seam"]
    with pytest.raises(MalformedGrid):
        paste(d, bad)
    assert check_grid(d, row(a, b)).ok


def test_nested_seam_reported_with_path():
    d = fixture("POS2_QUIN")
    bad = row(column(hid(d, "id_P"), hid(d, "id_Q")), vid(d, "id_P"))
    r = check_grid(d, bad)
    assert not r.ok
    assert r.violations[0].witness[0] == "0,0"


def test_malformed_shapes():
    with pytest.raises(MalformedGrid):
        PastingGrid(2, 2, ["a"])
    with pytest.raises(MalformedGrid):
        PastingGrid.from_rows([["a", "b"], ["c"]])
    with pytest.raises(MalformedGrid):
        check_grid(POS, PastingGrid(0, 0, []))


def test_grid_accessors():
    g = PastingGrid.from_rows([["a", "b"], ["c", "d"]])
    assert g.row(1) == ["c", "d"]
    assert g.column(1) == ["b", "d"]
    assert g.to_rows() == [["a", "b"], ["c", "d"]]
