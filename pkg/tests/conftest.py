from functools import reduce

import pytest

from dblcat.core import hcomp, vcomp
from dblcat.pasting import PastingGrid

# criterion number -> (passed, description); filled by test_acceptance
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def columns_first(d, g):
    """Evaluate a grid column by column: an independent order for comparisons."""
    if isinstance(g, str):
        return g
    cols = []
    for j in range(g.cols):
        cells = [columns_first(d, c) for c in g.column(j)]
        cols.append(reduce(lambda a, b: vcomp(d, a, b), cells))
    return reduce(lambda a, b: hcomp(d, a, b), cols)


def compatible_2x2(d):
    """Every 2x2 grid of squares whose seams agree."""
    for a, ba in sorted(d.squares.items()):
        for b in d.by_left.get(ba.right, ()):
            bb = d.squares[b]
            for c in d.by_top.get(ba.bottom, ()):
                bc = d.squares[c]
                for x in d.by_top_left.get((bb.bottom, bc.right), ()):
                    yield PastingGrid.from_rows([[a, b], [c, x]])


@pytest.fixture
def cols_first():
    return columns_first


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, desc = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {desc}")
