"""Declaration documents: a canonical, sorted-key JSON encoding.

Every document is ``{"schema": 1, "kind": ..., "body": ...}``.  Tables keyed
by pairs are written as sorted lists of records, so the text form of a
structure is unique and diff-able.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .companions import CompanionPair
from .conjunctions import Conjunction
from .core import Boundary, Category, DoubleCategory, TwoCategory, ValidationReport
from .errors import DanglingId, ParseError, UnknownKind
from .pasting import PastingGrid

SCHEMA = 1
KINDS = ("double_category", "two_category", "category", "psfunctor", "grid", "mate_request",
         "report")


@dataclass(frozen=True)
class Document:
    kind: str
    body: Any


def _canon(x):
    """Plain JSON values with string keys; the encoders already emit sorted records."""
    if isinstance(x, dict):
        return {str(k): _canon(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_canon(v) for v in x]
    return x


def serialize(doc: Document) -> str:
    if doc.kind not in KINDS:
        raise UnknownKind(f"unknown document kind {doc.kind!r}")
    payload = {"schema": SCHEMA, "kind": doc.kind, "body": _canon(doc.body)}
    return json.dumps(payload, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def parse(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, e.lineno, e.colno) from None
    if not isinstance(raw, dict) or set(raw) != {"schema", "kind", "body"}:
        raise ParseError("a document is an object with keys schema, kind and body", 1, 1)
    if raw["schema"] != SCHEMA:
        raise ParseError(f"unsupported schema {raw['schema']!r}", 1, 1)
    kind = raw["kind"]
    if kind not in KINDS:
        raise UnknownKind(f"unknown document kind {kind!r}", 1, 1)
    doc = Document(kind, raw["body"])
    _CHECKS.get(kind, lambda body: None)(doc.body)
    return doc


# ---------------------------------------------------------------------------
# encoders


def _pairs(table, a="second", b="first"):
    return sorted(({a: x, b: y, "result": v} for (x, y), v in table.items()),
                  key=lambda r: (r[a], r[b]))


def _unpairs(rows, a="second", b="first"):
    return {(r[a], r[b]): r["result"] for r in rows}


def _ends(table):
    return {k: list(v) for k, v in sorted(table.items())}


def encode_double(d: DoubleCategory) -> dict:
    return {
        "objects": sorted(d.objects),
        "v_arrows": _ends(d.v_arrows),
        "h_arrows": _ends(d.h_arrows),
        "squares": {s: b._asdict() for s, b in sorted(d.squares.items())},
        "v_compose": _pairs(d.v_compose),
        "h_compose": _pairs(d.h_compose),
        "sq_hcomp": _pairs(d.sq_hcomp, "left", "right"),
        "sq_vcomp": _pairs(d.sq_vcomp, "top", "bottom"),
        "v_id": dict(sorted(d.v_id.items())),
        "h_id": dict(sorted(d.h_id.items())),
        "sq_id_of_v": dict(sorted(d.sq_id_of_v.items())),
        "sq_id_of_h": dict(sorted(d.sq_id_of_h.items())),
    }


def decode_double(body) -> DoubleCategory:
    _check_double(body)
    return DoubleCategory(
        objects=tuple(body["objects"]),
        v_arrows={k: tuple(v) for k, v in body["v_arrows"].items()},
        h_arrows={k: tuple(v) for k, v in body["h_arrows"].items()},
        squares={k: Boundary(**v) for k, v in body["squares"].items()},
        v_compose=_unpairs(body["v_compose"]),
        h_compose=_unpairs(body["h_compose"]),
        sq_hcomp=_unpairs(body["sq_hcomp"], "left", "right"),
        sq_vcomp=_unpairs(body["sq_vcomp"], "top", "bottom"),
        v_id=dict(body["v_id"]),
        h_id=dict(body["h_id"]),
        sq_id_of_v=dict(body["sq_id_of_v"]),
        sq_id_of_h=dict(body["sq_id_of_h"]),
    )


def encode_two(k: TwoCategory) -> dict:
    return {
        "objects": sorted(k.objects),
        "one_cells": _ends(k.one_cells),
        "two_cells": _ends(k.two_cells),
        "compose1": _pairs(k.compose1),
        "id1": dict(sorted(k.id1.items())),
        "vcomp2": _pairs(k.vcomp2),
        "hcomp2": _pairs(k.hcomp2),
        "id2": dict(sorted(k.id2.items())),
    }


def decode_two(body) -> TwoCategory:
    _check_two(body)
    return TwoCategory(
        objects=tuple(body["objects"]),
        one_cells={k: tuple(v) for k, v in body["one_cells"].items()},
        two_cells={k: tuple(v) for k, v in body["two_cells"].items()},
        compose1=_unpairs(body["compose1"]),
        id1=dict(body["id1"]),
        vcomp2=_unpairs(body["vcomp2"]),
        hcomp2=_unpairs(body["hcomp2"]),
        id2=dict(body["id2"]),
    )


def encode_category(c: Category) -> dict:
    return {"objects": sorted(c.objects), "arrows": _ends(c.arrows),
            "compose": _pairs(c.compose), "identities": dict(sorted(c.identities.items()))}


def decode_category(body) -> Category:
    _check_category(body)
    return Category(tuple(body["objects"]), {k: tuple(v) for k, v in body["arrows"].items()},
                    _unpairs(body["compose"]), dict(body["identities"]))


def encode_psfunctor(F) -> dict:
    return {
        "dom": encode_double(F.dom),
        "cod": encode_double(F.cod),
        "obj_map": dict(sorted(F.obj_map.items())),
        "v_map": dict(sorted(F.v_map.items())),
        "h_map": dict(sorted(F.h_map.items())),
        "sq_map": dict(sorted(F.sq_map.items())),
        "unit_h": dict(sorted(F.unit_h.items())),
        "unit_v": dict(sorted(F.unit_v.items())),
        "comp_v": _pairs(F.comp_v),
        "comp_h": _pairs(F.comp_h),
    }


def decode_psfunctor(body):
    from .psfunctor import DoublePseudofunctor
    _check_psfunctor(body)
    return DoublePseudofunctor(
        dom=decode_double(body["dom"]), cod=decode_double(body["cod"]),
        obj_map=dict(body["obj_map"]), v_map=dict(body["v_map"]), h_map=dict(body["h_map"]),
        sq_map=dict(body["sq_map"]), unit_h=dict(body["unit_h"]), unit_v=dict(body["unit_v"]),
        comp_v=_unpairs(body["comp_v"]), comp_h=_unpairs(body["comp_h"]))


def encode_grid(g) -> dict:
    if isinstance(g, str):
        return g
    return {"rows": g.rows, "cols": g.cols, "cells": [encode_grid(c) for c in g.cells]}


def decode_grid(body) -> PastingGrid:
    _check_grid(body)

    def go(x):
        if isinstance(x, str):
            return x
        return PastingGrid(x["rows"], x["cols"], tuple(go(c) for c in x["cells"]))
    return go(body)


def grid_squares(g) -> list[str]:
    if isinstance(g, str):
        return [g]
    return [s for c in g.cells for s in grid_squares(c)]


def resolve_grid(body, d: DoubleCategory) -> PastingGrid:
    """Decode a grid and make sure every square it mentions exists in ``d``."""
    g = decode_grid(body)
    for s in grid_squares(g):
        if s not in d.squares:
            raise DanglingId(s, "grid")
    return g


def encode_pair(p: CompanionPair) -> dict:
    return {"f": p.f, "f_prime": p.f_prime, "phi": p.phi, "psi": p.psi}


def encode_conjunction(c: Conjunction) -> dict:
    return {"f": c.f, "g": c.g, "eta": c.eta, "eps": c.eps}


def encode_report(command: str, report: ValidationReport | None = None, result=None,
                  ok: bool | None = None) -> dict:
    report = report if report is not None else ValidationReport()
    return {
        "command": command,
        "ok": report.ok if ok is None else ok,
        "violations": [{"family": v.family, "witness": list(v.witness), "detail": v.detail}
                       for v in report.sorted().violations],
        "result": result,
    }


def to_document(obj) -> Document:
    from .psfunctor import DoublePseudofunctor
    if isinstance(obj, DoubleCategory):
        return Document("double_category", encode_double(obj))
    if isinstance(obj, TwoCategory):
        return Document("two_category", encode_two(obj))
    if isinstance(obj, Category):
        return Document("category", encode_category(obj))
    if isinstance(obj, DoublePseudofunctor):
        return Document("psfunctor", encode_psfunctor(obj))
    if isinstance(obj, PastingGrid):
        return Document("grid", encode_grid(obj))
    raise TypeError(f"cannot encode {type(obj).__name__}")


def from_document(doc: Document):
    decoders = {"double_category": decode_double, "two_category": decode_two,
                "category": decode_category, "psfunctor": decode_psfunctor,
                "grid": decode_grid}
    if doc.kind not in decoders:
        raise UnknownKind(f"{doc.kind} documents do not describe a structure")
    return decoders[doc.kind](doc.body)


# ---------------------------------------------------------------------------
# structural checks


def _need(body, keys, where):
    if not isinstance(body, dict):
        raise ParseError(f"{where}: expected an object")
    missing = [k for k in keys if k not in body]
    if missing:
        raise ParseError(f"{where}: missing {', '.join(missing)}")


def _refs(ids, known, where):
    for x in ids:
        if x not in known:
            raise DanglingId(x, where)


def _check_rows(rows, a, b, where, dom, out):
    if not isinstance(rows, list):
        raise ParseError(f"{where}: expected a list of records")
    for r in rows:
        _need(r, (a, b, "result"), where)
        _refs((r[a], r[b]), dom, where)
        _refs((r["result"],), out, where)


def _check_double(body):
    keys = ("objects", "v_arrows", "h_arrows", "squares", "v_compose", "h_compose",
            "sq_hcomp", "sq_vcomp", "v_id", "h_id", "sq_id_of_v", "sq_id_of_h")
    _need(body, keys, "double_category")
    objs = set(body["objects"])
    for name in ("v_arrows", "h_arrows"):
        for x, ends in body[name].items():
            _refs(ends, objs, f"{name}[{x}]")
    V, H, S = body["v_arrows"], body["h_arrows"], body["squares"]
    for s, b in S.items():
        _need(b, ("top", "left", "right", "bottom"), f"squares[{s}]")
        _refs((b["top"], b["bottom"]), H, f"squares[{s}]")
        _refs((b["left"], b["right"]), V, f"squares[{s}]")
    _check_rows(body["v_compose"], "second", "first", "v_compose", V, V)
    _check_rows(body["h_compose"], "second", "first", "h_compose", H, H)
    _check_rows(body["sq_hcomp"], "left", "right", "sq_hcomp", S, S)
    _check_rows(body["sq_vcomp"], "top", "bottom", "sq_vcomp", S, S)
    for name, dom, out in (("v_id", objs, V), ("h_id", objs, H),
                           ("sq_id_of_v", V, S), ("sq_id_of_h", H, S)):
        _refs(body[name].keys(), dom, name)
        _refs(body[name].values(), out, name)


def _check_two(body):
    _need(body, ("objects", "one_cells", "two_cells", "compose1", "id1", "vcomp2", "hcomp2",
                 "id2"), "two_category")
    objs, O, T = set(body["objects"]), body["one_cells"], body["two_cells"]
    for x, ends in O.items():
        _refs(ends, objs, f"one_cells[{x}]")
    for x, ends in T.items():
        _refs(ends, O, f"two_cells[{x}]")
    _check_rows(body["compose1"], "second", "first", "compose1", O, O)
    _check_rows(body["vcomp2"], "second", "first", "vcomp2", T, T)
    _check_rows(body["hcomp2"], "second", "first", "hcomp2", T, T)
    _refs(body["id1"].keys(), objs, "id1")
    _refs(body["id1"].values(), O, "id1")
    _refs(body["id2"].keys(), O, "id2")
    _refs(body["id2"].values(), T, "id2")


def _check_category(body):
    _need(body, ("objects", "arrows", "compose", "identities"), "category")
    objs, A = set(body["objects"]), body["arrows"]
    for x, ends in A.items():
        _refs(ends, objs, f"arrows[{x}]")
    _check_rows(body["compose"], "second", "first", "compose", A, A)
    _refs(body["identities"].keys(), objs, "identities")
    _refs(body["identities"].values(), A, "identities")


def _check_psfunctor(body):
    _need(body, ("dom", "cod", "obj_map", "v_map", "h_map", "sq_map", "unit_h", "unit_v",
                 "comp_v", "comp_h"), "psfunctor")
    _check_double(body["dom"])
    _check_double(body["cod"])
    dom, cod = body["dom"], body["cod"]
    for name, src, tgt in (("obj_map", "objects", "objects"), ("v_map", "v_arrows", "v_arrows"),
                           ("h_map", "h_arrows", "h_arrows"), ("sq_map", "squares", "squares")):
        _refs(body[name].keys(), set(dom[src]), name)
        _refs(body[name].values(), set(cod[tgt]), name)
    for name in ("unit_h", "unit_v"):
        _refs(body[name].keys(), set(dom["objects"]), name)
        _refs(body[name].values(), cod["squares"], name)
    _check_rows(body["comp_v"], "second", "first", "comp_v", dom["v_arrows"], cod["squares"])
    _check_rows(body["comp_h"], "second", "first", "comp_h", dom["h_arrows"], cod["squares"])


def _check_grid(body):
    if isinstance(body, str):
        return
    _need(body, ("rows", "cols", "cells"), "grid")
    if not isinstance(body["cells"], list) or len(body["cells"]) != body["rows"] * body["cols"]:
        raise ParseError("grid: cells must be a row-major list of rows*cols entries")
    for c in body["cells"]:
        _check_grid(c)


def _check_mate_request(body):
    _need(body, ("calculus", "c1", "c2", "cell", "direction"), "mate_request")
    if body["calculus"] not in ("companion", "conjunction"):
        raise ParseError(f"mate_request: unknown calculus {body['calculus']!r}")
    if body["direction"] not in ("toBeta", "toAlpha"):
        raise ParseError(f"mate_request: unknown direction {body['direction']!r}")


def _check_report(body):
    _need(body, ("command", "ok", "violations", "result"), "report")


_CHECKS = {
    "double_category": _check_double,
    "two_category": _check_two,
    "category": _check_category,
    "psfunctor": _check_psfunctor,
    "grid": _check_grid,
    "mate_request": _check_mate_request,
    "report": _check_report,
}
