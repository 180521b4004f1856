"""Rectangular pasting diagrams.

A grid cell is either a square id or a nested ``PastingGrid``; a nested grid
lets one cell of the outer grid span what would otherwise be several rows or
columns (the mate figures need this, since a single square sits beside a
column of two).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Union

from .core import Boundary, DoubleCategory, ValidationReport, compose_h, compose_v, hcomp, vcomp
from .errors import DblCatError, MalformedGrid

Cell = Union[str, "PastingGrid"]


@dataclass(frozen=True)
class PastingGrid:
    rows: int
    cols: int
    cells: tuple  # row-major

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        if self.rows < 0 or self.cols < 0 or len(self.cells) != self.rows * self.cols:
            raise MalformedGrid(f"{self.rows}x{self.cols} grid with {len(self.cells)} cells")

    def at(self, i: int, j: int) -> Cell:
        return self.cells[i * self.cols + j]

    def row(self, i: int) -> list[Cell]:
        return [self.at(i, j) for j in range(self.cols)]

    def column(self, j: int) -> list[Cell]:
        return [self.at(i, j) for i in range(self.rows)]

    @classmethod
    def from_rows(cls, rows) -> "PastingGrid":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else 0
        if any(len(r) != width for r in rows):
            raise MalformedGrid("ragged rows")
        return cls(len(rows), width, tuple(c for r in rows for c in r))

    def to_rows(self) -> list[list[Cell]]:
        return [self.row(i) for i in range(self.rows)]


def row(*cells: Cell) -> PastingGrid:
    return PastingGrid(1, len(cells), cells)


def column(*cells: Cell) -> PastingGrid:
    return PastingGrid(len(cells), 1, cells)


def outer_boundary(d: DoubleCategory, cell: Cell) -> Boundary:
    """Boundary of a cell or grid, computed from arrows alone."""
    if isinstance(cell, str):
        return d.boundary(cell)
    g = cell
    if g.rows == 0 or g.cols == 0:
        raise MalformedGrid("empty grid has no outer boundary")
    bs = [[outer_boundary(d, c) for c in g.row(i)] for i in range(g.rows)]
    top = reduce(lambda acc, b: compose_h(d, b.top, acc), (b for b in bs[0][1:]), bs[0][0].top)
    bottom = reduce(lambda acc, b: compose_h(d, b.bottom, acc), bs[-1][1:], bs[-1][0].bottom)
    left = reduce(lambda acc, r: compose_v(d, r[0].left, acc), bs[1:], bs[0][0].left)
    right = reduce(lambda acc, r: compose_v(d, r[-1].right, acc), bs[1:], bs[0][-1].right)
    return Boundary(top, left, right, bottom)


def check_grid(d: DoubleCategory, g: PastingGrid) -> ValidationReport:
    """Every seam mismatch of ``g`` (and of its nested grids).

    An empty grid has no outer boundary and is rejected outright.
    """
    if g.rows == 0 or g.cols == 0:
        raise MalformedGrid("empty grid has no outer boundary")
    r = ValidationReport()
    _check(d, g, r, ())
    return r.sorted()


def _check(d, g, r, path):
    if g.rows == 0 or g.cols == 0:
        r.add("grid_empty", path)
        return
    bounds = {}
    for i in range(g.rows):
        for j in range(g.cols):
            c = g.at(i, j)
            here = path + (f"{i},{j}",)
            if isinstance(c, PastingGrid):
                sub = ValidationReport()
                _check(d, c, sub, here)
                if not sub.ok:
                    r.violations.extend(sub.violations)
                    continue
            try:
                bounds[i, j] = outer_boundary(d, c)
            except DblCatError as e:
                r.add("grid_cell", here, str(e))
    for (i, j), b in bounds.items():
        right = bounds.get((i, j + 1))
        if right is not None and b.right != right.left:
            r.add("grid_seam", path + (f"{i},{j}|{i},{j + 1}",), f"{b.right} != {right.left}")
        below = bounds.get((i + 1, j))
        if below is not None and b.bottom != below.top:
            r.add("grid_seam", path + (f"{i},{j}/{i + 1},{j}",), f"{b.bottom} != {below.top}")


def paste(d: DoubleCategory, g: Cell) -> str:
    """Evaluate rows with ``hcomp`` and then the column of rows with ``vcomp``."""
    if isinstance(g, str):
        d.boundary(g)
        return g
    report = check_grid(d, g)
    if not report.ok:
        v = report.violations[0]
        raise MalformedGrid(f"{v.family} at {'/'.join(v.witness)}: {v.detail}")
    return _eval(d, g)


def _eval(d, g):
    rows = []
    for i in range(g.rows):
        cells = [c if isinstance(c, str) else _eval(d, c) for c in g.row(i)]
        rows.append(reduce(lambda a, b: hcomp(d, a, b), cells))
    return reduce(lambda a, b: vcomp(d, a, b), rows)
