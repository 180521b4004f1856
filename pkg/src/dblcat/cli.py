"""Command line front end.

Machine output (always a parseable document) goes to stdout, a one-line
human summary to stderr.  Exit status: 0 ok, 1 violations, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import companions as comp
from . import conjunctions as conj
from . import constructions as cons
from . import dslio
from .core import (Category, DoubleCategory, TwoCategory, ValidationReport, validate,
                   validate_2category, validate_category)
from .errors import DblCatError, ParseError, UnknownCell
from .pasting import PastingGrid, check_grid, paste
from .psfunctor import DoublePseudofunctor, check_double_pseudofunctor


class _Usage(Exception):
    pass


def _load(args, *kinds):
    """The input structure, from ``--fixture`` or a document file."""
    if args.fixture:
        obj = cons.fixture(args.fixture)
    elif args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        obj = dslio.from_document(dslio.parse(text))
    else:
        raise _Usage("give --fixture NAME or an input document")
    if kinds and not isinstance(obj, kinds):
        want = " or ".join(k.__name__ for k in kinds)
        raise _Usage(f"this command needs a {want}, got {type(obj).__name__}")
    return obj


def _pick(items, spec, first, second, what):
    """Select by ``a``, ``a:b`` or either with a ``#n`` suffix (0-based)."""
    spec, _, idx = spec.partition("#")
    a, _, b = spec.partition(":")
    hits = [x for x in items if getattr(x, first) == a and (not b or getattr(x, second) == b)]
    if not hits:
        raise _Usage(f"no {what} matches {spec!r}")
    n = int(idx) if idx else 0
    if n >= len(hits):
        raise _Usage(f"{what} {spec!r} has only {len(hits)} match(es)")
    return hits[n]


def _need_arrow(d: DoubleCategory, f):
    if f not in d.v_arrows:
        raise UnknownCell(f"no vertical arrow {f!r}")


def _pair(d, spec):
    f = spec.partition("#")[0].partition(":")[0]
    _need_arrow(d, f)
    return _pick(comp.find_companions(d, f), spec, "f", "f_prime", "companion pair")


def _conjunction(d, spec):
    f = spec.partition("#")[0].partition(":")[0]
    _need_arrow(d, f)
    return _pick(conj.find_conjoints(d, f), spec, "f", "g", "conjunction")


def _report_out(args, report: ValidationReport, result=None, what=""):
    body = dslio.encode_report(args.command, report, result)
    return dslio.Document("report", body), (0 if report.ok else 1), (
        what or ("ok" if report.ok else f"{len(report)} violation(s): {', '.join(report.families)}"))


def _validate_any(obj) -> ValidationReport:
    if isinstance(obj, DoubleCategory):
        return validate(obj)
    if isinstance(obj, TwoCategory):
        return validate_2category(obj)
    if isinstance(obj, Category):
        return validate_category(obj)
    return check_double_pseudofunctor(obj)


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args):
    obj = _load(args)
    return _report_out(args, _validate_any(obj), {"structure": type(obj).__name__})


def cmd_companions(args):
    d = _load(args, DoubleCategory)
    _need_arrow(d, args.f)
    pairs = comp.find_companions(d, args.f)
    return _report_out(args, ValidationReport(), [dslio.encode_pair(p) for p in pairs],
                       f"{len(pairs)} companion pair(s) for {args.f}")


def cmd_conjoints(args):
    d = _load(args, DoubleCategory)
    _need_arrow(d, args.f)
    cs = conj.find_conjoints(d, args.f)
    return _report_out(args, ValidationReport(), [dslio.encode_conjunction(c) for c in cs],
                       f"{len(cs)} conjunction(s) for {args.f}")


def cmd_mate(args):
    d = _load(args, DoubleCategory)
    calculus, c1, c2, cell, direction, factors = (args.calculus, args.c1, args.c2, args.cell,
                                                  args.direction, args.factors)
    if args.request:
        doc = dslio.parse(Path(args.request).read_text())
        if doc.kind != "mate_request":
            raise _Usage("--request needs a mate_request document")
        b = doc.body
        calculus, c1, c2, cell, direction = (b["calculus"], b["c1"], b["c2"], b["cell"],
                                             b["direction"])
        factors = b.get("factors")
    if not (c1 and c2 and cell):
        raise _Usage("mate needs --c1, --c2 and --cell (or --request)")
    if cell not in d.squares:
        raise UnknownCell(f"no square {cell!r}")
    if calculus == "companion":
        mate = comp.companion_mate(d, _pair(d, c1), _pair(d, c2), cell, direction, factors)
    else:
        mate = conj.conj_mate(d, _conjunction(d, c1), _conjunction(d, c2), cell, direction,
                              factors)
    return _report_out(args, ValidationReport(), {"cell": cell, "direction": direction,
                                                  "mate": mate}, f"mate of {cell}: {mate}")


def cmd_mate_table(args):
    d = _load(args, DoubleCategory)
    iota = _conjunction(d, args.iota)
    if args.iota_b:
        iota = (iota, _conjunction(d, args.iota_b))
    for s in (args.seed, args.seed_right):
        if s is not None and s not in d.squares:
            raise UnknownCell(f"no square {s!r}")
    t = conj.base_change_table(d, iota, _conjunction(d, args.f_src), _conjunction(d, args.f_dst),
                               args.seed, args.seed_right)
    r = ValidationReport()
    if not t.linkage_ok:
        r.add("mate_table_linkage", tuple(c for c in t.cells[0] if c))
    result = {"cells": [list(x) for x in t.cells], "invertible": [list(x) for x in t.invertible],
              "linkage_ok": t.linkage_ok}
    return _report_out(args, r, result)


def cmd_paste(args):
    d = _load(args, DoubleCategory)
    if args.grid:
        grid = dslio.resolve_grid(dslio.parse(Path(args.grid).read_text()).body, d)
    elif args.row:
        grid = PastingGrid.from_rows(args.row)
        dslio.resolve_grid(dslio.encode_grid(grid), d)
    else:
        raise _Usage("paste needs --grid FILE or --row ID... lines")
    if isinstance(grid, str):
        return _report_out(args, ValidationReport(), {"square": paste(d, grid)})
    report = check_grid(d, grid)
    result = {"square": paste(d, grid)} if report.ok else None
    return _report_out(args, report, result,
                       f"pasted to {result['square']}" if result else "")


def _structure(obj):
    return dslio.to_document(obj), 0, f"{type(obj).__name__} with {len(_cells(obj))} top cells"


def _cells(obj):
    if isinstance(obj, DoubleCategory):
        return obj.squares
    if isinstance(obj, TwoCategory):
        return obj.two_cells
    return obj.arrows


def cmd_quin(args):
    return _structure(cons.quin(_load(args, TwoCategory)))


def cmd_sq(args):
    return _structure(cons.square_category(_load(args, Category)))


def cmd_transpose(args):
    return _structure(cons.transpose(_load(args, DoubleCategory)))


def _derived(args, k: TwoCategory):
    r = validate_2category(k)
    doc = dslio.to_document(k)
    if r.ok:
        return doc, 0, f"2-category with {len(k.one_cells)} 1-cells, {len(k.two_cells)} 2-cells"
    return _report_out(args, r, {"two_category": doc.body})


def cmd_str(args):
    return _derived(args, comp.str_2category(_load(args, DoubleCategory)))


def cmd_conj(args):
    return _derived(args, conj.conj_2category(_load(args, DoubleCategory)))


def cmd_check_psfunctor(args):
    F = _load(args, DoublePseudofunctor)
    return _report_out(args, check_double_pseudofunctor(F))


def cmd_fixture(args):
    return _structure(cons.fixture(args.name))


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--fixture", metavar="NAME", help="use a named fixture as input")
    common.add_argument("--input", "-i", metavar="FILE", help="input document ('-' for stdin)")
    common.add_argument("--json", action="store_true", help="machine output only (no summary)")

    p = argparse.ArgumentParser(prog="dblcat", description="Finite double category workbench.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    add("validate", cmd_validate, "check every axiom family")
    add("companions", cmd_companions, "companion pairs of a vertical arrow").add_argument("f")
    add("conjoints", cmd_conjoints, "conjunctions with a given left arrow").add_argument("f")

    m = add("mate", cmd_mate, "mate of a square under companions or conjunctions")
    m.add_argument("--calculus", choices=("companion", "conjunction"), default="conjunction")
    m.add_argument("--c1", metavar="SPEC", help="f, f:g, optionally with #n")
    m.add_argument("--c2", metavar="SPEC")
    m.add_argument("--cell")
    m.add_argument("--direction", choices=("toBeta", "toAlpha"), default="toBeta")
    m.add_argument("--factors", nargs=2, metavar=("X", "Y"))
    m.add_argument("--request", metavar="FILE", help="mate_request document")

    t = add("mate-table", cmd_mate_table, "base-change mate table")
    t.add_argument("--iota", required=True, metavar="SPEC")
    t.add_argument("--iota-b", metavar="SPEC", help="second ι conjunction, if different")
    t.add_argument("--f-src", required=True, metavar="SPEC")
    t.add_argument("--f-dst", required=True, metavar="SPEC")
    t.add_argument("--seed", required=True)
    t.add_argument("--seed-right")

    g = add("paste", cmd_paste, "evaluate a pasting grid")
    g.add_argument("--grid", metavar="FILE", help="grid document")
    g.add_argument("--row", nargs="+", action="append", metavar="ID", help="one grid row")

    add("quin", cmd_quin, "quintet double category of a 2-category")
    add("sq", cmd_sq, "double category of commutative squares of a category")
    add("transpose", cmd_transpose, "swap horizontal and vertical structure")
    add("str", cmd_str, "2-category of companion pairs")
    add("conj", cmd_conj, "2-category of conjunctions")
    add("check-psfunctor", cmd_check_psfunctor, "coherence check of a double pseudofunctor")
    add("fixture", cmd_fixture, "print a named fixture").add_argument("name")
    return p


def cli(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        doc, code, summary = args.func(args)
    except (_Usage, ParseError, DblCatError, OSError) as e:
        kind = "usage" if isinstance(e, _Usage) else type(e).__name__
        body = dslio.encode_report(args.command, ValidationReport(),
                                   {"error": kind, "message": str(e)}, ok=False)
        stdout.write(dslio.serialize(dslio.Document("report", body)))
        if not args.json:
            stderr.write(f"dblcat {args.command}: error: {e}\n")
        return 2
    stdout.write(dslio.serialize(doc))
    if not args.json:
        stderr.write(f"dblcat {args.command}: {summary}\n")
    return code


def main():
    sys.exit(cli())


if __name__ == "__main__":
    main()
