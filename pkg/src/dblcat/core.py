"""Finite strict double categories stored as explicit composition tables.

Orientation conventions (fixed once, used everywhere):

* ``compose_v(d, g, f)`` and ``compose_h(d, k, h)`` return ``g∘f`` / ``k∘h``
  ("second after first"); the tables are keyed ``(second, first)``.
* A square has boundary ``top: a→c``, ``left: a→b``, ``right: c→d`` and
  ``bottom: b→d``.
* ``hcomp(d, α, β)`` puts α on the left and β on the right; it needs
  ``α.right == β.left``.
* ``vcomp(d, α, β)`` puts α on top and β below; it needs
  ``α.bottom == β.top``.
* ``1^g`` (``sq_id_of_v``) is the identity square of a vertical arrow g:
  horizontal identities on top and bottom, g on both sides.  ``1_f``
  (``sq_id_of_h``) is the identity square of a horizontal arrow f.

Cells are never identified by their boundary: two squares are equal only if
their ids are equal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, NamedTuple

from .errors import MissingEntry, NotComposable, UnknownCell

Id = str


class Boundary(NamedTuple):
    top: Id
    left: Id
    right: Id
    bottom: Id


@dataclass(frozen=True, order=True)
class Violation:
    family: str
    witness: tuple[Id, ...]
    detail: str = ""


@dataclass
class ValidationReport:
    """Accumulated axiom violations; empty means valid."""

    violations: list[Violation] = field(default_factory=list)

    def add(self, family, witness, detail=""):
        self.violations.append(Violation(family, tuple(witness), detail))

    def extend(self, other: "ValidationReport", prefix: str = ""):
        for v in other.violations:
            self.violations.append(Violation(prefix + v.family, v.witness, v.detail))

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def families(self) -> list[str]:
        return sorted({v.family for v in self.violations})

    def sorted(self) -> "ValidationReport":
        return ValidationReport(sorted(set(self.violations)))

    def __len__(self):
        return len(self.violations)


# ---------------------------------------------------------------------------
# data types


@dataclass(frozen=True, eq=True)
class DoubleCategory:
    objects: tuple[Id, ...]
    v_arrows: Mapping[Id, tuple[Id, Id]]
    h_arrows: Mapping[Id, tuple[Id, Id]]
    squares: Mapping[Id, Boundary]
    v_compose: Mapping[tuple[Id, Id], Id]
    h_compose: Mapping[tuple[Id, Id], Id]
    sq_hcomp: Mapping[tuple[Id, Id], Id]
    sq_vcomp: Mapping[tuple[Id, Id], Id]
    v_id: Mapping[Id, Id]
    h_id: Mapping[Id, Id]
    sq_id_of_v: Mapping[Id, Id]
    sq_id_of_h: Mapping[Id, Id]

    __hash__ = object.__hash__

    def boundary(self, sq: Id) -> Boundary:
        try:
            return self.squares[sq]
        except KeyError:
            raise UnknownCell(f"no square {sq!r}") from None

    def vsrc(self, g):
        return self._arrow(self.v_arrows, g, "vertical")[0]

    def vtgt(self, g):
        return self._arrow(self.v_arrows, g, "vertical")[1]

    def hsrc(self, f):
        return self._arrow(self.h_arrows, f, "horizontal")[0]

    def htgt(self, f):
        return self._arrow(self.h_arrows, f, "horizontal")[1]

    @staticmethod
    def _arrow(table, x, kind):
        try:
            return table[x]
        except KeyError:
            raise UnknownCell(f"no {kind} arrow {x!r}") from None

    def squares_with(self, b: Boundary) -> list[Id]:
        return self._by_boundary.get(tuple(b), [])

    @cached_property
    def _by_boundary(self):
        idx: dict[tuple, list[Id]] = {}
        for s in sorted(self.squares):
            idx.setdefault(tuple(self.squares[s]), []).append(s)
        return idx

    @cached_property
    def by_left(self) -> dict[Id, list[Id]]:
        return _index(self.squares, lambda b: b.left)

    @cached_property
    def by_top(self) -> dict[Id, list[Id]]:
        return _index(self.squares, lambda b: b.top)

    @cached_property
    def by_top_left(self) -> dict[tuple[Id, Id], list[Id]]:
        return _index(self.squares, lambda b: (b.top, b.left))

    def is_v_identity(self, g) -> bool:
        return self.v_id.get(self.vsrc(g)) == g

    def is_h_identity(self, f) -> bool:
        return self.h_id.get(self.hsrc(f)) == f

    def is_h_globular(self, sq) -> bool:
        b = self.boundary(sq)
        return self.is_v_identity(b.left) and self.is_v_identity(b.right)

    def is_v_globular(self, sq) -> bool:
        b = self.boundary(sq)
        return self.is_h_identity(b.top) and self.is_h_identity(b.bottom)

    @cached_property
    def _inverse_cache(self) -> dict:
        return {}


def _index(squares, key):
    out: dict = {}
    for s in sorted(squares):
        out.setdefault(key(squares[s]), []).append(s)
    return out


@dataclass(frozen=True, eq=True)
class TwoCategory:
    """A finite strict 2-category.

    ``compose1[(g, f)] = g∘f``; ``vcomp2[(β, α)] = β•α`` for ``α: f⇒g``,
    ``β: g⇒h``; ``hcomp2[(β, α)] = β*α`` for α in ``K(a,b)`` and β in
    ``K(b,c)``.  ``two_cells[α] = (source 1-cell, target 1-cell)``.
    """

    objects: tuple[Id, ...]
    one_cells: Mapping[Id, tuple[Id, Id]]
    two_cells: Mapping[Id, tuple[Id, Id]]
    compose1: Mapping[tuple[Id, Id], Id]
    id1: Mapping[Id, Id]
    vcomp2: Mapping[tuple[Id, Id], Id]
    hcomp2: Mapping[tuple[Id, Id], Id]
    id2: Mapping[Id, Id]

    __hash__ = object.__hash__

    def src1(self, f):
        return self.one_cells[f][0]

    def tgt1(self, f):
        return self.one_cells[f][1]

    def hom(self, a, b) -> list[Id]:
        return [f for f in sorted(self.one_cells) if self.one_cells[f] == (a, b)]

    def cells_between(self, f, g) -> list[Id]:
        return self._by_ends.get((f, g), [])

    @cached_property
    def _by_ends(self):
        out: dict = {}
        for c in sorted(self.two_cells):
            out.setdefault(self.two_cells[c], []).append(c)
        return out

    def whisker_left(self, g, alpha):
        """``g ◁ α``: post-compose the 1-cell g."""
        return self.hcomp2[(self.id2[g], alpha)]

    def whisker_right(self, alpha, f):
        """``α ▷ f``: pre-compose the 1-cell f."""
        return self.hcomp2[(alpha, self.id2[f])]

    def relabel(self, objects=None, one=None, two=None) -> "TwoCategory":
        """Rename cells; each argument is a mapping old id -> new id."""
        o = (lambda x: objects[x]) if objects else (lambda x: x)
        p = (lambda x: one[x]) if one else (lambda x: x)
        q = (lambda x: two[x]) if two else (lambda x: x)
        return TwoCategory(
            objects=tuple(sorted(o(x) for x in self.objects)),
            one_cells={p(f): (o(a), o(b)) for f, (a, b) in self.one_cells.items()},
            two_cells={q(c): (p(s), p(t)) for c, (s, t) in self.two_cells.items()},
            compose1={(p(g), p(f)): p(h) for (g, f), h in self.compose1.items()},
            id1={o(a): p(f) for a, f in self.id1.items()},
            vcomp2={(q(b), q(a)): q(c) for (b, a), c in self.vcomp2.items()},
            hcomp2={(q(b), q(a)): q(c) for (b, a), c in self.hcomp2.items()},
            id2={p(f): q(c) for f, c in self.id2.items()},
        )


@dataclass(frozen=True, eq=True)
class Category:
    objects: tuple[Id, ...]
    arrows: Mapping[Id, tuple[Id, Id]]
    compose: Mapping[tuple[Id, Id], Id]
    identities: Mapping[Id, Id]

    __hash__ = object.__hash__


# ---------------------------------------------------------------------------
# composition


def compose_v(d: DoubleCategory, g: Id, f: Id) -> Id:
    """``g∘f`` for vertical arrows."""
    if d.vtgt(f) != d.vsrc(g):
        raise NotComposable(f"vertical {g!r} after {f!r}: {d.vtgt(f)} != {d.vsrc(g)}")
    try:
        return d.v_compose[(g, f)]
    except KeyError:
        raise MissingEntry(f"v_compose has no entry for ({g}, {f})") from None


def compose_h(d: DoubleCategory, k: Id, h: Id) -> Id:
    """``k∘h`` for horizontal arrows."""
    if d.htgt(h) != d.hsrc(k):
        raise NotComposable(f"horizontal {k!r} after {h!r}: {d.htgt(h)} != {d.hsrc(k)}")
    try:
        return d.h_compose[(k, h)]
    except KeyError:
        raise MissingEntry(f"h_compose has no entry for ({k}, {h})") from None


def hcomp(d: DoubleCategory, alpha: Id, beta: Id) -> Id:
    """Horizontal composite with ``alpha`` on the left."""
    a, b = d.boundary(alpha), d.boundary(beta)
    if a.right != b.left:
        raise NotComposable(f"hcomp({alpha}, {beta}): right {a.right} != left {b.left}")
    try:
        return d.sq_hcomp[(alpha, beta)]
    except KeyError:
        raise MissingEntry(f"sq_hcomp has no entry for ({alpha}, {beta})") from None


def vcomp(d: DoubleCategory, alpha: Id, beta: Id) -> Id:
    """Vertical composite with ``alpha`` on top."""
    a, b = d.boundary(alpha), d.boundary(beta)
    if a.bottom != b.top:
        raise NotComposable(f"vcomp({alpha}, {beta}): bottom {a.bottom} != top {b.top}")
    try:
        return d.sq_vcomp[(alpha, beta)]
    except KeyError:
        raise MissingEntry(f"sq_vcomp has no entry for ({alpha}, {beta})") from None


def identities(d: DoubleCategory, a: Id) -> tuple[Id, Id, Id]:
    """``(1_a, 1^a, 1^{1_a})``; the last equals ``1_{1^a}`` in a valid d."""
    if a not in d.objects:
        raise UnknownCell(f"no object {a!r}")
    va, ha = d.v_id[a], d.h_id[a]
    return va, ha, d.sq_id_of_v[va]


def hid(d: DoubleCategory, f: Id) -> Id:
    """``1_f``, the identity square of a horizontal arrow."""
    return d.sq_id_of_h[f]


def vid(d: DoubleCategory, g: Id) -> Id:
    """``1^g``, the identity square of a vertical arrow."""
    return d.sq_id_of_v[g]


def oid(d: DoubleCategory, a: Id) -> Id:
    return d.sq_id_of_v[d.v_id[a]]


def h_inverse(d: DoubleCategory, alpha: Id) -> Id | None:
    """Inverse of an h-globular square under vertical composition, if any."""
    key = ("h", alpha)
    cache = d._inverse_cache
    if key not in cache:
        b = d.boundary(alpha)
        found = None
        for cand in d.squares_with(Boundary(b.bottom, b.left, b.right, b.top)):
            if (d.sq_vcomp.get((alpha, cand)) == d.sq_id_of_h.get(b.top)
                    and d.sq_vcomp.get((cand, alpha)) == d.sq_id_of_h.get(b.bottom)):
                found = cand
                break
        cache[key] = found
    return cache[key]


def v_inverse(d: DoubleCategory, alpha: Id) -> Id | None:
    """Inverse of a v-globular square under horizontal composition, if any."""
    key = ("v", alpha)
    cache = d._inverse_cache
    if key not in cache:
        b = d.boundary(alpha)
        found = None
        for cand in d.squares_with(Boundary(b.top, b.right, b.left, b.bottom)):
            if (d.sq_hcomp.get((alpha, cand)) == d.sq_id_of_v.get(b.left)
                    and d.sq_hcomp.get((cand, alpha)) == d.sq_id_of_v.get(b.right)):
                found = cand
                break
        cache[key] = found
    return cache[key]


# ---------------------------------------------------------------------------
# validation


def _check_category_laws(report, family, objs, arrows, comp, ident):
    """Category laws on a table; ``comp`` keyed (second, first)."""
    by_src: dict = {}
    for f in sorted(arrows):
        by_src.setdefault(arrows[f][0], []).append(f)
    for a in objs:
        i = ident.get(a)
        if i is None:
            report.add(family, (a,), "missing identity")
        elif arrows.get(i) != (a, a):
            report.add(family, (a, i), "identity has wrong endpoints")
    for f in sorted(arrows):
        a, b = arrows[f]
        for g in by_src.get(b, ()):
            gf = comp.get((g, f))
            if gf is None:
                continue
            for h in by_src.get(arrows[g][1], ()):
                hg = comp.get((h, g))
                if hg is None:
                    continue
                left, right = comp.get((h, gf)), comp.get((hg, f))
                if left != right:
                    report.add(family, (h, g, f), "associativity")
        ia, ib = ident.get(a), ident.get(b)
        if ia is not None and comp.get((f, ia)) != f:
            report.add(family, (f, ia), "right unit")
        if ib is not None and comp.get((ib, f)) != f:
            report.add(family, (ib, f), "left unit")


def _check_table_domain(report, family, table, expected_keys, check_output):
    expected = set(expected_keys)
    for key in sorted(expected - set(table)):
        report.add("table_domain", key, f"{family} missing entry")
    for key in sorted(set(table) - expected):
        report.add("table_domain", key, f"{family} entry on non-composable pair")
    for key in sorted(expected & set(table)):
        problem = check_output(key, table[key])
        if problem:
            report.add("boundary", key + (table[key],), f"{family}: {problem}")


def validate(d: DoubleCategory) -> ValidationReport:
    """Exhaustive axiom check; never stops at the first failure.

    Families: ``reference``, ``square_corners``, ``table_domain``,
    ``boundary``, ``v_category``, ``h_category``, ``hcomp_assoc``,
    ``vcomp_assoc``, ``hcomp_unit``, ``vcomp_unit``,
    ``identity_functoriality``, ``interchange``, ``identity_square``.
    """
    r = ValidationReport()
    objs = set(d.objects)
    V, H, S = d.v_arrows, d.h_arrows, d.squares

    for kind, arrows in (("v", V), ("h", H)):
        for x in sorted(arrows):
            for end in arrows[x]:
                if end not in objs:
                    r.add("reference", (x, end), f"{kind}-arrow endpoint")
    for s in sorted(S):
        b = S[s]
        if b.top not in H or b.bottom not in H or b.left not in V or b.right not in V:
            r.add("reference", (s,), "square boundary")
    for table, name, dom in ((d.v_id, "v_id", objs), (d.h_id, "h_id", objs),
                             (d.sq_id_of_v, "sq_id_of_v", set(V)),
                             (d.sq_id_of_h, "sq_id_of_h", set(H))):
        target = V if name == "v_id" else H if name == "h_id" else S
        for k in sorted(dom - set(table)):
            r.add("table_domain", (k,), f"{name} missing")
        for k, v in sorted(table.items()):
            if k not in dom or v not in target:
                r.add("reference", (k, v), name)
    if not r.ok:
        return r.sorted()

    for s in sorted(S):
        b = S[s]
        if (H[b.top][0] != V[b.left][0] or H[b.top][1] != V[b.right][0]
                or H[b.bottom][0] != V[b.left][1] or H[b.bottom][1] != V[b.right][1]):
            r.add("square_corners", (s,))

    def arrow_pairs(arrows):
        by_src: dict = {}
        for f in sorted(arrows):
            by_src.setdefault(arrows[f][0], []).append(f)
        return [(g, f) for f in sorted(arrows) for g in by_src.get(arrows[f][1], ())]

    def arrow_out(arrows):
        def check(key, out):
            g, f = key
            if out not in arrows:
                return "unknown output"
            if arrows[out] != (arrows[f][0], arrows[g][1]):
                return "endpoints"
            return None
        return check

    _check_table_domain(r, "v_compose", d.v_compose, arrow_pairs(V), arrow_out(V))
    _check_table_domain(r, "h_compose", d.h_compose, arrow_pairs(H), arrow_out(H))

    hpairs = [(a, b) for a in sorted(S) for b in d.by_left.get(S[a].right, ())]
    vpairs = [(a, b) for a in sorted(S) for b in d.by_top.get(S[a].bottom, ())]

    def hc_out(key, out):
        a, b = S[key[0]], S[key[1]]
        if out not in S:
            return "unknown output"
        want = Boundary(d.h_compose.get((b.top, a.top)), a.left, b.right,
                        d.h_compose.get((b.bottom, a.bottom)))
        return None if S[out] == want else "forced boundary"

    def vc_out(key, out):
        a, b = S[key[0]], S[key[1]]
        if out not in S:
            return "unknown output"
        want = Boundary(a.top, d.v_compose.get((b.left, a.left)),
                        d.v_compose.get((b.right, a.right)), b.bottom)
        return None if S[out] == want else "forced boundary"

    _check_table_domain(r, "sq_hcomp", d.sq_hcomp, hpairs, hc_out)
    _check_table_domain(r, "sq_vcomp", d.sq_vcomp, vpairs, vc_out)

    for a in sorted(objs):
        ha = d.h_id[a]
        va = d.v_id[a]
        if V[va] != (a, a) or H[ha] != (a, a):
            r.add("boundary", (a,), "identity arrow endpoints")
    for g in sorted(V):
        a, b = V[g]
        want = Boundary(d.h_id[a], g, g, d.h_id[b])
        if S[d.sq_id_of_v[g]] != want:
            r.add("boundary", (g, d.sq_id_of_v[g]), "1^g boundary")
    for f in sorted(H):
        a, c = H[f]
        want = Boundary(f, d.v_id[a], d.v_id[c], f)
        if S[d.sq_id_of_h[f]] != want:
            r.add("boundary", (f, d.sq_id_of_h[f]), "1_f boundary")

    _check_category_laws(r, "v_category", sorted(objs), V, d.v_compose, d.v_id)
    _check_category_laws(r, "h_category", sorted(objs), H, d.h_compose, d.h_id)

    for a in sorted(objs):
        if d.sq_id_of_v[d.v_id[a]] != d.sq_id_of_h[d.h_id[a]]:
            r.add("identity_square", (a, d.sq_id_of_v[d.v_id[a]], d.sq_id_of_h[d.h_id[a]]))

    HC, VC = d.sq_hcomp, d.sq_vcomp
    by_left, by_top, by_tl = d.by_left, d.by_top, d.by_top_left

    # unit laws
    for s in sorted(S):
        b = S[s]
        if HC.get((d.sq_id_of_v[b.left], s)) != s or HC.get((s, d.sq_id_of_v[b.right])) != s:
            r.add("hcomp_unit", (s,))
        if VC.get((d.sq_id_of_h[b.top], s)) != s or VC.get((s, d.sq_id_of_h[b.bottom])) != s:
            r.add("vcomp_unit", (s,))

    # identity functoriality
    for (g2, g1), g in sorted(d.v_compose.items()):
        if VC.get((d.sq_id_of_v[g1], d.sq_id_of_v[g2])) != d.sq_id_of_v.get(g):
            r.add("identity_functoriality", (g1, g2), "1^{g'g} = 1^{g'} ⊟ 1^g")
    for (f2, f1), f in sorted(d.h_compose.items()):
        if HC.get((d.sq_id_of_h[f1], d.sq_id_of_h[f2])) != d.sq_id_of_h.get(f):
            r.add("identity_functoriality", (f1, f2), "1_{f'f} = 1_f ⊡ 1_{f'}")

    # associativity
    for (a, b), ab in HC.items():
        for c in by_left.get(S[b].right, ()):
            bc = HC.get((b, c))
            if bc is None:
                continue
            if HC.get((ab, c)) != HC.get((a, bc)):
                r.add("hcomp_assoc", (a, b, c))
    for (a, b), ab in VC.items():
        for c in by_top.get(S[b].bottom, ()):
            bc = VC.get((b, c))
            if bc is None:
                continue
            if VC.get((ab, c)) != VC.get((a, bc)):
                r.add("vcomp_assoc", (a, b, c))

    # middle-four interchange over every compatible 2x2 grid
    for (a, b), ab in HC.items():
        sa, sb = S[a], S[b]
        for c in by_top.get(sa.bottom, ()):
            ac = VC.get((a, c))
            if ac is None:
                continue
            for e in by_tl.get((sb.bottom, S[c].right), ()):
                ce, be = HC.get((c, e)), VC.get((b, e))
                if ce is None or be is None:
                    continue
                lhs = VC.get((ab, ce))
                rhs = HC.get((ac, be))
                if lhs != rhs:
                    r.add("interchange", (a, b, c, e), f"rows-first {lhs} != columns-first {rhs}")
    return r.sorted()


def validate_category(c: Category) -> ValidationReport:
    r = ValidationReport()
    objs = set(c.objects)
    for f, (a, b) in sorted(c.arrows.items()):
        if a not in objs or b not in objs:
            r.add("reference", (f,))
    if not r.ok:
        return r
    for (g, f), h in sorted(c.compose.items()):
        if f not in c.arrows or g not in c.arrows or h not in c.arrows:
            r.add("reference", (g, f, h))
        elif c.arrows[f][1] != c.arrows[g][0]:
            r.add("table_domain", (g, f), "non-composable entry")
        elif c.arrows[h] != (c.arrows[f][0], c.arrows[g][1]):
            r.add("boundary", (g, f, h))
    for f, (a, b) in sorted(c.arrows.items()):
        for g, (b2, _) in sorted(c.arrows.items()):
            if b2 == b and (g, f) not in c.compose:
                r.add("table_domain", (g, f), "missing entry")
    _check_category_laws(r, "category", sorted(objs), c.arrows, c.compose, c.identities)
    return r.sorted()


def validate_2category(k: TwoCategory) -> ValidationReport:
    """Strict 2-category axioms, checked exhaustively."""
    r = ValidationReport()
    objs = set(k.objects)
    O, T = k.one_cells, k.two_cells
    for f, (a, b) in sorted(O.items()):
        if a not in objs or b not in objs:
            r.add("reference", (f,))
    for c, (s, t) in sorted(T.items()):
        if s not in O or t not in O:
            r.add("reference", (c,))
        elif O[s] != O[t]:
            r.add("boundary", (c,), "2-cell between non-parallel 1-cells")
    for f in sorted(O):
        if f not in k.id2:
            r.add("table_domain", (f,), "id2 missing")
        elif k.id2[f] not in T or T[k.id2[f]] != (f, f):
            r.add("boundary", (f, k.id2[f]), "id2")
    if not r.ok:
        return r.sorted()

    by_src1: dict = {}
    for f in sorted(O):
        by_src1.setdefault(O[f][0], []).append(f)
    pairs1 = [(g, f) for f in sorted(O) for g in by_src1.get(O[f][1], ())]

    def out1(key, out):
        g, f = key
        if out not in O:
            return "unknown output"
        return None if O[out] == (O[f][0], O[g][1]) else "endpoints"

    _check_table_domain(r, "compose1", k.compose1, pairs1, out1)
    _check_category_laws(r, "one_category", sorted(objs), O, k.compose1, k.id1)

    by_s2: dict = {}
    by_a2: dict = {}  # 2-cells keyed by source object of their 1-cells
    for c in sorted(T):
        by_s2.setdefault(T[c][0], []).append(c)
        by_a2.setdefault(O[T[c][0]][0], []).append(c)
    vpairs = [(b, a) for a in sorted(T) for b in by_s2.get(T[a][1], ())]
    hpairs = [(b, a) for a in sorted(T) for b in by_a2.get(O[T[a][0]][1], ())]

    def vout(key, out):
        b, a = key
        if out not in T:
            return "unknown output"
        return None if T[out] == (T[a][0], T[b][1]) else "endpoints"

    def hout(key, out):
        b, a = key
        if out not in T:
            return "unknown output"
        want = (k.compose1.get((T[b][0], T[a][0])), k.compose1.get((T[b][1], T[a][1])))
        return None if T[out] == want else "endpoints"

    _check_table_domain(r, "vcomp2", k.vcomp2, vpairs, vout)
    _check_table_domain(r, "hcomp2", k.hcomp2, hpairs, hout)

    V2, H2 = k.vcomp2, k.hcomp2
    for c in sorted(T):
        s, t = T[c]
        if V2.get((c, k.id2[s])) != c or V2.get((k.id2[t], c)) != c:
            r.add("vcomp2_unit", (c,))
        a, b = O[s]
        if H2.get((c, k.id2[k.id1[a]])) != c or H2.get((k.id2[k.id1[b]], c)) != c:
            r.add("hcomp2_unit", (c,))
    for (b, a), ba in V2.items():
        for c in by_s2.get(T[b][1], ()):
            cb = V2.get((c, b))
            if cb is not None and V2.get((c, ba)) != V2.get((cb, a)):
                r.add("vcomp2_assoc", (a, b, c))
    for (b, a), ba in H2.items():
        for c in by_a2.get(O[T[b][0]][1], ()):
            cb = H2.get((c, b))
            if cb is not None and H2.get((c, ba)) != H2.get((cb, a)):
                r.add("hcomp2_assoc", (a, b, c))
    for (g, f), gf in sorted(k.compose1.items()):
        if H2.get((k.id2[g], k.id2[f])) != k.id2.get(gf):
            r.add("identity_functoriality", (g, f))
    # interchange: (δ•γ)*(β•α) = (δ*β)•(γ*α) with α,β in K(a,b), γ,δ in K(b,c)
    for (beta, alpha), ba in V2.items():
        for gamma in by_a2.get(O[T[alpha][0]][1], ()):
            ga = H2.get((gamma, alpha))
            if ga is None:
                continue
            for delta in by_s2.get(T[gamma][1], ()):
                dg = V2.get((delta, gamma))
                db = H2.get((delta, beta))
                if dg is None or db is None:
                    continue
                if H2.get((dg, ba)) != V2.get((db, ga)):
                    r.add("interchange", (alpha, beta, gamma, delta))
    return r.sorted()


# ---------------------------------------------------------------------------
# underlying 2-categories


def horizontal_2category(d: DoubleCategory) -> TwoCategory:
    """Objects, horizontal arrows and h-globular squares (top ⇒ bottom)."""
    glob = {s: d.squares[s] for s in d.squares if d.is_h_globular(s)}
    return TwoCategory(
        objects=tuple(d.objects),
        one_cells=dict(d.h_arrows),
        two_cells={s: (b.top, b.bottom) for s, b in glob.items()},
        compose1=dict(d.h_compose),
        id1=dict(d.h_id),
        vcomp2={(b, a): d.sq_vcomp[(a, b)] for a in glob for b in glob
                if glob[a].bottom == glob[b].top},
        hcomp2={(b, a): d.sq_hcomp[(a, b)] for a in glob for b in glob
                if glob[a].right == glob[b].left},
        id2=dict(d.sq_id_of_h),
    )


def vertical_2category(d: DoubleCategory) -> TwoCategory:
    """Objects, vertical arrows and v-globular squares.

    A v-globular square is a 2-cell from its right side to its left side,
    matching the quintet reading of a square ``α: k∘f ⇒ g∘h``.
    """
    glob = {s: d.squares[s] for s in d.squares if d.is_v_globular(s)}
    return TwoCategory(
        objects=tuple(d.objects),
        one_cells=dict(d.v_arrows),
        two_cells={s: (b.right, b.left) for s, b in glob.items()},
        compose1=dict(d.v_compose),
        id1=dict(d.v_id),
        vcomp2={(b, a): d.sq_hcomp[(b, a)] for a in glob for b in glob
                if glob[b].right == glob[a].left},
        hcomp2={(b, a): d.sq_vcomp[(a, b)] for a in glob for b in glob
                if glob[a].bottom == glob[b].top},
        id2=dict(d.sq_id_of_v),
    )
