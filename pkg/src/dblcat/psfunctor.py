"""Double pseudofunctors: data, coherence checking, composition, induced
pseudofunctors, Quin(F), and transport of companions, conjunctions and mates.

Constraint cells of ``F: D → E`` (sides not listed are identities):

* ``unit_h[a] = F_a``: h-globular, top F(1^a), bottom 1^{Fa}
* ``unit_v[a] = F^a``: v-globular, left 1_{Fa}, right F(1_a)
* ``comp_v[(g, f)] = F^{gf}``: v-globular, left Fg∘Ff, right F(gf)
* ``comp_h[(k, h)] = F_{kh}``: h-globular, top F(kh), bottom Fk∘Fh

All four families must be invertible (``h_inverse`` / ``v_inverse``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .companions import CompanionPair
from .conjunctions import Conjunction, conj_mate
from .constructions import fixture, quin, quintet_cell, quintet_id, transpose
from .core import (Boundary, DoubleCategory, TwoCategory, ValidationReport, h_inverse, hcomp,
                   hid, horizontal_2category, oid, v_inverse, vcomp,
                   vertical_2category, vid)
from .companions import MateDir
from .errors import DblCatError, Mismatch, NotInvertible
from .pasting import PastingGrid, column, paste, row


@dataclass(frozen=True, eq=False)
class DoublePseudofunctor:
    dom: DoubleCategory
    cod: DoubleCategory
    obj_map: Mapping[str, str]
    v_map: Mapping[str, str]
    h_map: Mapping[str, str]
    sq_map: Mapping[str, str]
    unit_h: Mapping[str, str]
    unit_v: Mapping[str, str]
    comp_v: Mapping[tuple[str, str], str]
    comp_h: Mapping[tuple[str, str], str]

    def replace(self, **changes) -> "DoublePseudofunctor":
        fields = {k: getattr(self, k) for k in self.__dataclass_fields__}
        fields.update(changes)
        return DoublePseudofunctor(**fields)

    def tables_equal(self, other: "DoublePseudofunctor") -> bool:
        return all(dict(getattr(self, k)) == dict(getattr(other, k))
                   for k in self.__dataclass_fields__ if k not in ("dom", "cod"))


@dataclass(frozen=True, eq=False)
class Pseudofunctor2:
    """Pseudofunctor of 2-categories with ``comp[(g, f)]: F(gf) ⇒ Fg∘Ff``
    and ``unit[a]: F(1_a) ⇒ 1_{Fa}``."""

    dom: TwoCategory
    cod: TwoCategory
    obj_map: Mapping[str, str]
    one_map: Mapping[str, str]
    two_map: Mapping[str, str]
    comp: Mapping[tuple[str, str], str]
    unit: Mapping[str, str]


def _inv_h(d, s):
    x = h_inverse(d, s)
    if x is None:
        raise NotInvertible(f"{s} has no inverse under vertical composition")
    return x


def _inv_v(d, s):
    x = v_inverse(d, s)
    if x is None:
        raise NotInvertible(f"{s} has no inverse under horizontal composition")
    return x


# ---------------------------------------------------------------------------
# identity and strict lifts


def identity_psfunctor(d: DoubleCategory) -> DoublePseudofunctor:
    return DoublePseudofunctor(
        dom=d, cod=d,
        obj_map={a: a for a in d.objects},
        v_map={g: g for g in d.v_arrows},
        h_map={f: f for f in d.h_arrows},
        sq_map={s: s for s in d.squares},
        unit_h={a: oid(d, a) for a in d.objects},
        unit_v={a: oid(d, a) for a in d.objects},
        comp_v={k: vid(d, gf) for k, gf in d.v_compose.items()},
        comp_h={k: hid(d, kh) for k, kh in d.h_compose.items()},
    )


def identity_pseudofunctor2(k: TwoCategory) -> Pseudofunctor2:
    return Pseudofunctor2(k, k, {a: a for a in k.objects}, {f: f for f in k.one_cells},
                          {c: c for c in k.two_cells},
                          {key: k.id2[gf] for key, gf in k.compose1.items()},
                          {a: k.id2[k.id1[a]] for a in k.objects})


def strict_2functor(dom: TwoCategory, cod: TwoCategory, obj_map, one_map, two_map) -> Pseudofunctor2:
    """A 2-functor, given as cell maps; constraints are identities."""
    return Pseudofunctor2(dom, cod, dict(obj_map), dict(one_map), dict(two_map),
                          {key: cod.id2[one_map[gf]] for key, gf in dom.compose1.items()},
                          {a: cod.id2[one_map[dom.id1[a]]] for a in dom.objects})


# ---------------------------------------------------------------------------
# 2-category pseudofunctors


def check_pseudofunctor2(F: Pseudofunctor2) -> ValidationReport:
    """Classical pseudofunctor axioms, exhaustively."""
    K, L = F.dom, F.cod
    r = ValidationReport()
    O, T = L.one_cells, L.two_cells
    for f, (a, b) in K.one_cells.items():
        if O.get(F.one_map.get(f)) != (F.obj_map[a], F.obj_map[b]):
            r.add("structure", (f,), "1-cell endpoints")
    for c, (f, g) in K.two_cells.items():
        if T.get(F.two_map.get(c)) != (F.one_map[f], F.one_map[g]):
            r.add("structure", (c,), "2-cell boundary")
    if not r.ok:
        return r.sorted()

    def inverse2(c):
        s, t = T[c]
        for x in L.cells_between(t, s):
            if L.vcomp2.get((x, c)) == L.id2[s] and L.vcomp2.get((c, x)) == L.id2[t]:
                return x
        return None

    Fm, Fo = F.one_map, F.obj_map
    for (g, f), gf in K.compose1.items():
        want = (Fm[gf], L.compose1[(Fm[g], Fm[f])])
        c = F.comp.get((g, f))
        if c is None or T.get(c) != want:
            r.add("constraint_boundary", (g, f))
        elif inverse2(c) is None:
            r.add("constraint_iso", (g, f))
    for a in K.objects:
        c = F.unit.get(a)
        if c is None or T.get(c) != (Fm[K.id1[a]], L.id1[Fo[a]]):
            r.add("constraint_boundary", (a,))
        elif inverse2(c) is None:
            r.add("constraint_iso", (a,))
    if not r.ok:
        return r.sorted()

    V2 = L.vcomp2
    for f in K.one_cells:
        if F.two_map[K.id2[f]] != L.id2[Fm[f]]:
            r.add("functoriality", (f,), "identity 2-cell")
    for (b, a), ba in K.vcomp2.items():
        if V2[(F.two_map[b], F.two_map[a])] != F.two_map[ba]:
            r.add("functoriality", (a, b), "vertical composite")
    for (beta, alpha), ba in K.hcomp2.items():
        f, f2 = K.two_cells[alpha]
        g, g2 = K.two_cells[beta]
        lhs = V2[(F.comp[(g2, f2)], F.two_map[ba])]
        rhs = V2[(L.hcomp2[(F.two_map[beta], F.two_map[alpha])], F.comp[(g, f)])]
        if lhs != rhs:
            r.add("naturality", (alpha, beta))
    for (g, f), gf in K.compose1.items():
        for h, (c, _) in K.one_cells.items():
            if c != K.one_cells[g][1]:
                continue
            hg = K.compose1[(h, g)]
            hgf = K.compose1[(h, gf)]
            assert hgf == K.compose1[(hg, f)]
            lhs = V2[(L.whisker_left(Fm[h], F.comp[(g, f)]), F.comp[(h, gf)])]
            rhs = V2[(L.whisker_right(F.comp[(h, g)], Fm[f]), F.comp[(hg, f)])]
            if lhs != rhs:
                r.add("assoc", (h, g, f))
    for f, (a, b) in K.one_cells.items():
        left = V2[(L.whisker_right(F.unit[b], Fm[f]), F.comp[(K.id1[b], f)])]
        right = V2[(L.whisker_left(Fm[f], F.unit[a]), F.comp[(f, K.id1[a])])]
        if left != L.id2[Fm[f]] or right != L.id2[Fm[f]]:
            r.add("unit", (f,))
    return r.sorted()


def quin_of_pseudofunctor(F: Pseudofunctor2, dom: DoubleCategory | None = None,
                          cod: DoubleCategory | None = None) -> DoublePseudofunctor:
    """Quin(F): a quintet α: k∘f ⇒ g∘h goes to φ_{g,h} • Fα • φ_{k,f}⁻¹."""
    K, L = F.dom, F.cod
    dom = dom or quin(K)
    cod = cod or quin(L)
    Fm = F.one_map

    inv_cache: dict = {}

    def inverse2(c):
        if c not in inv_cache:
            s, t = L.two_cells[c]
            inv_cache[c] = next(x for x in L.cells_between(t, s)
                                if L.vcomp2.get((x, c)) == L.id2[s])
        return inv_cache[c]

    sq_map = {}
    for s, b in dom.squares.items():
        alpha = quintet_cell(dom, s)
        cell = L.vcomp2[(F.comp[(b.bottom, b.left)],
                         L.vcomp2[(F.two_map[alpha], inverse2(F.comp[(b.right, b.top)]))])]
        sq_map[s] = quintet_id(Fm[b.top], Fm[b.bottom], Fm[b.left], Fm[b.right], cell)

    def one(a):
        return L.id1[F.obj_map[a]]

    unit = {a: quintet_id(Fm[K.id1[a]], one(a), one(a), one(a), F.unit[a]) for a in K.objects}
    unit_v = {a: quintet_id(one(a), one(a), one(a), Fm[K.id1[a]], F.unit[a]) for a in K.objects}
    comp_v, comp_h = {}, {}
    for (g, f), gf in K.compose1.items():
        a, c = K.one_cells[f][0], K.one_cells[g][1]
        both = L.compose1[(Fm[g], Fm[f])]
        comp_v[(g, f)] = quintet_id(one(a), one(c), both, Fm[gf], F.comp[(g, f)])
        comp_h[(g, f)] = quintet_id(Fm[gf], both, one(a), one(c), F.comp[(g, f)])
    return DoublePseudofunctor(
        dom=dom, cod=cod, obj_map=dict(F.obj_map), v_map=dict(Fm), h_map=dict(Fm),
        sq_map=sq_map, unit_h=unit, unit_v=unit_v, comp_v=comp_v, comp_h=comp_h)


# ---------------------------------------------------------------------------
# checking


def _expect(d: DoubleCategory, s, b: Boundary) -> bool:
    return s in d.squares and d.squares[s] == b


def check_double_pseudofunctor(F: DoublePseudofunctor) -> ValidationReport:
    """All structure, invertibility, coherence and double-naturality axioms.

    Families: ``structure``, ``constraint_boundary``, ``constraint_iso``,
    ``v_assoc``, ``h_assoc``, ``v_unit``, ``h_unit``, ``h_naturality``,
    ``v_naturality``, ``h_unit_naturality``, ``v_unit_naturality``.
    """
    D, E = F.dom, F.cod
    r = ValidationReport()
    Fo, Fv, Fh, Fs = F.obj_map, F.v_map, F.h_map, F.sq_map

    # 1. maps preserve sources, targets and boundaries
    for a in D.objects:
        if Fo.get(a) not in E.objects:
            r.add("structure", (a,), "object")
    if not r.ok:
        return r.sorted()
    for g, (a, b) in D.v_arrows.items():
        if E.v_arrows.get(Fv.get(g)) != (Fo[a], Fo[b]):
            r.add("structure", (g,), "vertical arrow")
    for f, (a, b) in D.h_arrows.items():
        if E.h_arrows.get(Fh.get(f)) != (Fo[a], Fo[b]):
            r.add("structure", (f,), "horizontal arrow")
    if not r.ok:
        return r.sorted()
    for s, b in D.squares.items():
        want = Boundary(Fh[b.top], Fv[b.left], Fv[b.right], Fh[b.bottom])
        if not _expect(E, Fs.get(s), want):
            r.add("structure", (s,), "square boundary")
    if not r.ok:
        return r.sorted()

    # 2-4. constraint boundaries and invertibility
    def one_v(a):
        return E.v_id[Fo[a]]

    def one_h(a):
        return E.h_id[Fo[a]]

    for a in D.objects:
        if not _expect(E, F.unit_h.get(a), Boundary(Fh[D.h_id[a]], one_v(a), one_v(a), one_h(a))):
            r.add("constraint_boundary", ("unit_h", a))
        elif h_inverse(E, F.unit_h[a]) is None:
            r.add("constraint_iso", ("unit_h", a))
        if not _expect(E, F.unit_v.get(a), Boundary(one_h(a), one_v(a), Fv[D.v_id[a]], one_h(a))):
            r.add("constraint_boundary", ("unit_v", a))
        elif v_inverse(E, F.unit_v[a]) is None:
            r.add("constraint_iso", ("unit_v", a))
    for (g, f), gf in D.v_compose.items():
        a, c = D.v_arrows[f][0], D.v_arrows[g][1]
        want = Boundary(one_h(a), E.v_compose[(Fv[g], Fv[f])], Fv[gf], one_h(c))
        if not _expect(E, F.comp_v.get((g, f)), want):
            r.add("constraint_boundary", ("comp_v", g, f))
        elif v_inverse(E, F.comp_v[(g, f)]) is None:
            r.add("constraint_iso", ("comp_v", g, f))
    for (k, h), kh in D.h_compose.items():
        a, c = D.h_arrows[h][0], D.h_arrows[k][1]
        want = Boundary(Fh[kh], one_v(a), one_v(c), E.h_compose[(Fh[k], Fh[h])])
        if not _expect(E, F.comp_h.get((k, h)), want):
            r.add("constraint_boundary", ("comp_h", k, h))
        elif h_inverse(E, F.comp_h[(k, h)]) is None:
            r.add("constraint_iso", ("comp_h", k, h))
    if not r.ok:
        return r.sorted()

    HC, VC = E.sq_hcomp, E.sq_vcomp
    uh, uv, cv, ch = F.unit_h, F.unit_v, F.comp_v, F.comp_h

    # 5. coherence in both directions
    by_src_v: dict = {}
    for g, (a, _) in D.v_arrows.items():
        by_src_v.setdefault(a, []).append(g)
    for (g, f), gf in D.v_compose.items():
        for h in by_src_v.get(D.v_arrows[g][1], ()):
            hg = D.v_compose[(h, g)]
            lhs = HC[(VC[(cv[(g, f)], vid(E, Fv[h]))], cv[(h, gf)])]
            rhs = HC[(VC[(vid(E, Fv[f]), cv[(h, g)])], cv[(hg, f)])]
            if lhs != rhs:
                r.add("v_assoc", (h, g, f))
    by_src_h: dict = {}
    for k, (a, _) in D.h_arrows.items():
        by_src_h.setdefault(a, []).append(k)
    for (g, f), gf in D.h_compose.items():
        for h in by_src_h.get(D.h_arrows[g][1], ()):
            hg = D.h_compose[(h, g)]
            lhs = VC[(ch[(h, gf)], HC[(ch[(g, f)], hid(E, Fh[h]))])]
            rhs = VC[(ch[(hg, f)], HC[(hid(E, Fh[f]), ch[(h, g)])])]
            if lhs != rhs:
                r.add("h_assoc", (h, g, f))
    for f, (a, b) in D.v_arrows.items():
        one = vid(E, Fv[f])
        if (HC[(VC[(one, uv[b])], cv[(D.v_id[b], f)])] != one
                or HC[(VC[(uv[a], one)], cv[(f, D.v_id[a])])] != one):
            r.add("v_unit", (f,))
    for f, (a, b) in D.h_arrows.items():
        one = hid(E, Fh[f])
        if (VC[(ch[(D.h_id[b], f)], HC[(one, uh[b])])] != one
                or VC[(ch[(f, D.h_id[a])], HC[(uh[a], one)])] != one):
            r.add("h_unit", (f,))

    # 6. double naturality and the transposes
    for (x, y), xy in D.sq_hcomp.items():
        bx, by = D.squares[x], D.squares[y]
        lhs = VC[(ch[(by.top, bx.top)], HC[(Fs[x], Fs[y])])]
        rhs = VC[(Fs[xy], ch[(by.bottom, bx.bottom)])]
        if lhs != rhs:
            r.add("h_naturality", (x, y))
    for (x, z), xz in D.sq_vcomp.items():
        bx, bz = D.squares[x], D.squares[z]
        lhs = HC[(VC[(Fs[x], Fs[z])], cv[(bz.right, bx.right)])]
        rhs = HC[(cv[(bz.left, bx.left)], Fs[xz])]
        if lhs != rhs:
            r.add("v_naturality", (x, z))
    for f, (a, b) in D.v_arrows.items():
        col = VC[(VC[(h_inverse(E, uh[a]), Fs[vid(D, f)])], uh[b])]
        if col != vid(E, Fv[f]):
            r.add("h_unit_naturality", (f,))
    for g, (a, b) in D.h_arrows.items():
        rw = HC[(HC[(uv[a], Fs[hid(D, g)])], v_inverse(E, uv[b]))]
        if rw != hid(E, Fh[g]):
            r.add("v_unit_naturality", (g,))
    return r.sorted()


# ---------------------------------------------------------------------------
# induced 2-cell maps and pseudofunctors


def HF(F: DoublePseudofunctor, alpha) -> str:
    """h-globular image ``F^a | Fα | (F^b)⁻¹`` of an h-globular α."""
    b = F.dom.boundary(alpha)
    a0, b0 = F.dom.h_arrows[b.top]
    return paste(F.cod, row(F.unit_v[a0], F.sq_map[alpha], _inv_v(F.cod, F.unit_v[b0])))


def VF(F: DoublePseudofunctor, alpha) -> str:
    """v-globular image ``F_a⁻¹ / Fα / F_b`` of a v-globular α."""
    b = F.dom.boundary(alpha)
    a0, b0 = F.dom.v_arrows[b.left]
    return paste(F.cod, column(_inv_h(F.cod, F.unit_h[a0]), F.sq_map[alpha], F.unit_h[b0]))


def induced_h(F: DoublePseudofunctor) -> Pseudofunctor2:
    HD, HE = horizontal_2category(F.dom), horizontal_2category(F.cod)
    return Pseudofunctor2(HD, HE, dict(F.obj_map), dict(F.h_map),
                          {c: HF(F, c) for c in HD.two_cells},
                          dict(F.comp_h), dict(F.unit_h))


def induced_v(F: DoublePseudofunctor) -> Pseudofunctor2:
    VD, VE = vertical_2category(F.dom), vertical_2category(F.cod)
    return Pseudofunctor2(VD, VE, dict(F.obj_map), dict(F.v_map),
                          {c: VF(F, c) for c in VD.two_cells},
                          dict(F.comp_v), dict(F.unit_v))


def transpose_psfunctor(F: DoublePseudofunctor) -> DoublePseudofunctor:
    """``F^T: D^T → E^T``; the constraints are inverted so that they point
    the way the definition requires."""
    E = F.cod
    return DoublePseudofunctor(
        dom=transpose(F.dom), cod=transpose(E), obj_map=dict(F.obj_map),
        v_map=dict(F.h_map), h_map=dict(F.v_map), sq_map=dict(F.sq_map),
        unit_h={a: _inv_v(E, s) for a, s in F.unit_v.items()},
        unit_v={a: _inv_h(E, s) for a, s in F.unit_h.items()},
        comp_v={k: _inv_h(E, s) for k, s in F.comp_h.items()},
        comp_h={k: _inv_v(E, s) for k, s in F.comp_v.items()},
    )


# ---------------------------------------------------------------------------
# composition


def compose_psfunctors(G: DoublePseudofunctor, F: DoublePseudofunctor) -> DoublePseudofunctor:
    """``G∘F``; constraints are pasted with the unit constraints of G."""
    if F.cod is not G.dom and F.cod != G.dom:
        raise Mismatch("F.cod is not G.dom")
    E2 = G.cod
    Go, Gv, Gh, Gs = G.obj_map, G.v_map, G.h_map, G.sq_map
    comp_h = {k: vcomp(E2, HF(G, s), G.comp_h[(F.h_map[k[0]], F.h_map[k[1]])])
              for k, s in F.comp_h.items()}
    unit_h = {a: vcomp(E2, HF(G, s), G.unit_h[F.obj_map[a]]) for a, s in F.unit_h.items()}
    comp_v = {k: hcomp(E2, G.comp_v[(F.v_map[k[0]], F.v_map[k[1]])], VF(G, s))
              for k, s in F.comp_v.items()}
    unit_v = {a: hcomp(E2, G.unit_v[F.obj_map[a]], VF(G, s)) for a, s in F.unit_v.items()}
    return DoublePseudofunctor(
        dom=F.dom, cod=E2,
        obj_map={a: Go[x] for a, x in F.obj_map.items()},
        v_map={g: Gv[x] for g, x in F.v_map.items()},
        h_map={f: Gh[x] for f, x in F.h_map.items()},
        sq_map={s: Gs[x] for s, x in F.sq_map.items()},
        unit_h=unit_h, unit_v=unit_v, comp_v=comp_v, comp_h=comp_h)


def compose_pseudofunctors2(G: Pseudofunctor2, F: Pseudofunctor2) -> Pseudofunctor2:
    L = G.cod
    comp = {k: L.vcomp2[(G.comp[(F.one_map[k[0]], F.one_map[k[1]])], G.two_map[c])]
            for k, c in F.comp.items()}
    unit = {a: L.vcomp2[(G.unit[F.obj_map[a]], G.two_map[c])] for a, c in F.unit.items()}
    return Pseudofunctor2(F.dom, L, {a: G.obj_map[x] for a, x in F.obj_map.items()},
                          {f: G.one_map[x] for f, x in F.one_map.items()},
                          {c: G.two_map[x] for c, x in F.two_map.items()}, comp, unit)


# ---------------------------------------------------------------------------
# transport of companions, conjunctions and mates


def map_companion(F: DoublePseudofunctor, p: CompanionPair) -> CompanionPair:
    E = F.cod
    a, b = F.dom.v_arrows[p.f]
    fa, fb = F.obj_map[a], F.obj_map[b]
    phi = paste(E, PastingGrid.from_rows([[F.sq_map[p.phi], _inv_v(E, F.unit_v[b])],
                                          [F.unit_h[b], oid(E, fb)]]))
    psi = paste(E, PastingGrid.from_rows([[oid(E, fa), _inv_h(E, F.unit_h[a])],
                                          [F.unit_v[a], F.sq_map[p.psi]]]))
    return CompanionPair(F.v_map[p.f], F.h_map[p.f_prime], phi, psi)


def map_conjunction(F: DoublePseudofunctor, c: Conjunction) -> Conjunction:
    E = F.cod
    a, b = F.dom.v_arrows[c.f]
    fa, fb = F.obj_map[a], F.obj_map[b]
    eta = paste(E, PastingGrid.from_rows([[_inv_h(E, F.unit_h[a]), oid(E, fa)],
                                          [F.sq_map[c.eta], _inv_v(E, F.unit_v[a])]]))
    eps = paste(E, PastingGrid.from_rows([[F.unit_v[b], F.sq_map[c.eps]],
                                          [oid(E, fb), F.unit_h[b]]]))
    return Conjunction(F.v_map[c.f], F.h_map[c.g], eta, eps)


def normalize_alpha(F: DoublePseudofunctor, alpha, h, f, m, j) -> str:
    """``F^{m,h} | Fα | (F^{f,j})⁻¹``: left Fm∘Fh, right Ff∘Fj."""
    E = F.cod
    return hcomp(E, hcomp(E, F.comp_v[(m, h)], F.sq_map[alpha]),
                 _inv_v(E, F.comp_v[(f, j)]))


def normalize_beta(F: DoublePseudofunctor, beta, i, k, g, n) -> str:
    """``F_{ik}⁻¹ / Fβ / F_{gn}``: top Fi∘Fk, bottom Fg∘Fn."""
    E = F.cod
    return vcomp(E, vcomp(E, _inv_h(E, F.comp_h[(i, k)]), F.sq_map[beta]), F.comp_h[(g, n)])


def mate_preservation_check(F: DoublePseudofunctor, c1: Conjunction, c2: Conjunction, cell,
                            direction=MateDir.TO_BETA, factors=None) -> bool:
    """Does F carry the mate of ``cell`` to the mate of its image?

    For α (top i, left m∘h, right f∘j, bottom n) with mate β, compare the
    normalized image of β with the mate, under the mapped conjunctions and
    factors (Fm, Fj), of the normalized image of α.  A toAlpha input is
    first converted to its α.
    """
    D = F.dom
    if MateDir(direction) is MateDir.TO_ALPHA:
        cell = conj_mate(D, c1, c2, cell, MateDir.TO_ALPHA, factors)
        factors = None
    if factors is None:
        from .conjunctions import conj_mate_factorizations
        facs = conj_mate_factorizations(D, c1, c2, cell, MateDir.TO_BETA)
        results = {mate_preservation_check(F, c1, c2, cell, MateDir.TO_BETA, fac) for fac in facs}
        if not facs:
            conj_mate(D, c1, c2, cell, MateDir.TO_BETA)  # raises BoundaryNotFactorable
        return all(results)
    m, j = factors
    beta = conj_mate(D, c1, c2, cell, MateDir.TO_BETA, factors)
    ba = D.boundary(cell)
    i, n = ba.top, ba.bottom
    na = normalize_alpha(F, cell, c2.f, c1.f, m, j)
    nb = normalize_beta(F, beta, i, c2.g, c1.g, n)
    d1, d2 = map_conjunction(F, c1), map_conjunction(F, c2)
    try:
        return conj_mate(F.cod, d1, d2, na, MateDir.TO_BETA, (F.v_map[m], F.v_map[j])) == nb
    except DblCatError:
        return False


def eligible_mate_cells(d: DoubleCategory, c1: Conjunction, c2: Conjunction):
    """Every ``(cell, (m, j))`` with the toBeta input shape for c1, c2."""
    from .conjunctions import conj_mate_factorizations
    out = []
    for s in sorted(d.squares):
        for fac in conj_mate_factorizations(d, c1, c2, s, MateDir.TO_BETA):
            out.append((s, fac))
    return out


# ---------------------------------------------------------------------------
# fixtures


def _pos2_collapse(target: str) -> Pseudofunctor2:
    k = fixture("POS2")
    one = k.id1[target]
    return strict_2functor(k, k, {a: target for a in k.objects},
                           {f: one for f in k.one_cells},
                           {c: k.id2[one] for c in k.two_cells})


def cocycle_pseudofunctor() -> Pseudofunctor2:
    """Identity on the 2-group, with ``F_{t,t} = s_1: F(t∘t) ⇒ t∘t``."""
    k = fixture("TWOGROUP")
    base = identity_pseudofunctor2(k)
    comp = dict(base.comp)
    comp[("t", "t")] = "s_1"
    return Pseudofunctor2(k, k, base.obj_map, base.one_map, base.two_map, comp, base.unit)


def build_fixture(key: str):
    if key == "PSF_ID_POS2":
        return identity_psfunctor(fixture("POS2_QUIN"))
    if key == "PSF_ID_TWOGROUP":
        return identity_psfunctor(fixture("TWOGROUP_QUIN"))
    if key == "PSF_COLLAPSE_P":
        return quin_of_pseudofunctor(_pos2_collapse("P"), fixture("POS2_QUIN"), fixture("POS2_QUIN"))
    if key == "PSF_COLLAPSE_Q":
        return quin_of_pseudofunctor(_pos2_collapse("Q"), fixture("POS2_QUIN"), fixture("POS2_QUIN"))
    if key == "PSF_COCYCLE":
        d = fixture("TWOGROUP_QUIN")
        return quin_of_pseudofunctor(cocycle_pseudofunctor(), d, d)
    if key == "PSF_ID_Z2_GROUPOID":
        return identity_psfunctor(fixture("Z2_GROUPOID_QUIN"))
    if key == "MUTANT_PSF_UNIT_H":
        # σ at one object only, so it cannot cancel against the other end
        base = fixture("PSF_ID_Z2_GROUPOID")
        return base.replace(unit_h={**base.unit_h,
                                    "x": quintet_id("x>x", "x>x", "x>x", "x>x", "s:x>x")})
    base = fixture("PSF_ID_TWOGROUP")
    if key == "MUTANT_PSF_COMP_H":
        return base.replace(comp_h={**base.comp_h, ("t", "1"): quintet_id("t", "t", "1", "1", "s_t")})
    if key == "MUTANT_PSF_COMP_V":
        return base.replace(comp_v={**base.comp_v, ("t", "1"): quintet_id("1", "1", "t", "t", "s_t")})
    raise KeyError(key)
