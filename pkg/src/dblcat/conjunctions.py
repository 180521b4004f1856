"""Conjunctions, conjunction mates, Conj(D), 2-of-3 and the base-change table.

A conjunction ``f ⧏ g`` has a vertical ``f: a → b``, a horizontal
``g: b → a`` and squares

* ``η``: top 1^a, left f, right 1_a, bottom g
* ``ε``: top g, left 1_b, right f, bottom 1^b

with ``hcomp(ε, η) = 1_g`` and ``vcomp(η, ε) = 1^f``.

Mate grids for ``c1 = (f ⧏ g)`` and ``c2 = (h ⧏ k)``:

* toBeta, α with top i, left m∘h, right f∘j, bottom n::

      [ ε_h ]        [ 1^j ]
      [ 1^m ]   α    [ η_f ]

* toAlpha, β with top i∘k, left m, right j, bottom g∘n::

      [ η_h   1_i ]
      [     β     ]
      [ 1_n   ε_f ]
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .companions import CompanionPair, MateDir, companion_mate, identity_pair, resolve_mate
from .core import (Boundary, DoubleCategory, TwoCategory, ValidationReport, compose_h,
                   h_inverse, hcomp, hid, horizontal_2category, v_inverse, vcomp, vid,
                   validate_2category)
from .errors import BoundaryMismatch, IncompatibleData, NotComposable, ShapeMismatch
from .pasting import PastingGrid, column, paste, row


@dataclass(frozen=True)
class Conjunction:
    f: str
    g: str
    eta: str
    eps: str


@dataclass(frozen=True)
class Adjunction2:
    left: str
    right: str
    unit: str
    counit: str


def identity_conjunction(d: DoubleCategory, a) -> Conjunction:
    s = vid(d, d.v_id[a])
    return Conjunction(d.v_id[a], d.h_id[a], s, s)


def _expected(d, f, g):
    a, b = d.v_arrows[f]
    return (Boundary(d.h_id[a], f, d.v_id[a], g),
            Boundary(g, d.v_id[b], f, d.h_id[b]))


def check_conjunction(d: DoubleCategory, c: Conjunction) -> bool:
    if c.f not in d.v_arrows or c.g not in d.h_arrows:
        raise BoundaryMismatch(f"{c}: unknown arrows")
    a, b = d.v_arrows[c.f]
    if d.h_arrows[c.g] != (b, a):
        raise BoundaryMismatch(f"{c}: {c.g} does not run backwards along {c.f}")
    want_eta, want_eps = _expected(d, c.f, c.g)
    if d.boundary(c.eta) != want_eta or d.boundary(c.eps) != want_eps:
        raise BoundaryMismatch(f"{c} does not have conjunction boundaries")
    return (d.sq_hcomp.get((c.eps, c.eta)) == hid(d, c.g)
            and d.sq_vcomp.get((c.eta, c.eps)) == vid(d, c.f))


def find_conjoints(d: DoubleCategory, f) -> list[Conjunction]:
    """All conjunctions with left conjoint ``f``."""
    a, b = d.v_arrows[f]
    out = []
    for g in sorted(d.h_arrows):
        if d.h_arrows[g] != (b, a):
            continue
        want_eta, want_eps = _expected(d, f, g)
        for eta in d.squares_with(want_eta):
            for eps in d.squares_with(want_eps):
                c = Conjunction(f, g, eta, eps)
                if check_conjunction(d, c):
                    out.append(c)
    return out


def all_conjunctions(d: DoubleCategory) -> list[Conjunction]:
    return [c for f in sorted(d.v_arrows) for c in find_conjoints(d, f)]


def compose_conjunctions(d: DoubleCategory, c1: Conjunction, c2: Conjunction) -> Conjunction:
    """``h∘f ⧏ g∘k`` from ``c1 = (f ⧏ g)`` and ``c2 = (h ⧏ k)``."""
    if d.v_arrows[c1.f][1] != d.v_arrows[c2.f][0]:
        raise NotComposable(f"{c2.f} after {c1.f}")
    eta = paste(d, PastingGrid.from_rows([[vid(d, c1.f), c1.eta],
                                          [c2.eta, hid(d, c1.g)]]))
    eps = paste(d, PastingGrid.from_rows([[hid(d, c2.g), c1.eps],
                                          [c2.eps, vid(d, c2.f)]]))
    return Conjunction(d.v_compose[(c2.f, c1.f)], compose_h(d, c1.g, c2.g), eta, eps)


# ---------------------------------------------------------------------------
# mates


def conj_mate_grid(d, c1: Conjunction, c2: Conjunction, cell, direction, factors):
    if MateDir(direction) is MateDir.TO_BETA:
        m, j = factors
        return row(column(c2.eps, vid(d, m)), cell, column(vid(d, j), c1.eta))
    i, n = factors
    return column(row(c2.eta, hid(d, i)), cell, row(hid(d, n), c1.eps))


def conj_mate_factorizations(d, c1, c2, cell, direction) -> list[tuple[str, str]]:
    """Every ``(m, j)`` (toBeta) or ``(i, n)`` (toAlpha) matching the cell."""
    b = d.boundary(cell)
    if MateDir(direction) is MateDir.TO_BETA:
        firsts = [m for (m, h), x in d.v_compose.items() if h == c2.f and x == b.left]
        seconds = [j for (f, j), x in d.v_compose.items() if f == c1.f and x == b.right]
    else:
        firsts = [i for (i, k), x in d.h_compose.items() if k == c2.g and x == b.top]
        seconds = [n for (g, n), x in d.h_compose.items() if g == c1.g and x == b.bottom]
    return sorted((x, y) for x in firsts for y in seconds)


def conj_mate(d: DoubleCategory, c1: Conjunction, c2: Conjunction, cell, direction,
              factors=None) -> str:
    """Mate of ``cell`` under ``c1 = (f ⧏ g)`` and ``c2 = (h ⧏ k)``.

    toBeta: α (top i, left m∘h, right f∘j, bottom n) ↦ β (top i∘k, left m,
    right j, bottom g∘n).  toAlpha is the inverse.  ``factors`` is ``(m, j)``
    or ``(i, n)``.
    """
    return resolve_mate(
        d, cell, direction, factors,
        lambda fac: conj_mate_grid(d, c1, c2, cell, direction, fac),
        conj_mate_factorizations(d, c1, c2, cell, direction))


def globular_mate(d, c1: Conjunction, c2: Conjunction, alpha) -> str:
    """``VD(f, h) → HD(k, g)``: the mate of a v-globular square (right f, left h)."""
    a, b = d.v_arrows[c1.f]
    return conj_mate(d, c1, c2, alpha, MateDir.TO_BETA, (d.v_id[b], d.v_id[a]))


# ---------------------------------------------------------------------------
# Conj(D)


@dataclass
class ConjData:
    two: TwoCategory
    conjunctions: dict[str, Conjunction]
    v_part: dict[str, str]  # 2-cell -> v-globular square α: f ⇒ h (right f, left h)
    h_part: dict[str, str]  # 2-cell -> its mate, h-globular k ⇒ g
    report: ValidationReport = field(default_factory=ValidationReport)


def _conj_ids(cs: list[Conjunction]) -> dict[str, Conjunction]:
    seen: dict[str, int] = {}
    out = {}
    for c in cs:
        base = f"{c.f}<{c.g}"
        n = seen.get(base, 0)
        seen[base] = n + 1
        out[base if n == 0 else f"{base}#{n}"] = c
    return out


def conj_data(d: DoubleCategory) -> ConjData:
    """Conj(D), with 1-cells pointing along the left conjoint."""
    conj = _conj_ids(all_conjunctions(d))
    cid = {c: k for k, c in conj.items()}
    one = {k: d.v_arrows[c.f] for k, c in conj.items()}
    report = ValidationReport()

    compose1 = {}
    for k1, c1 in conj.items():
        for k2, c2 in conj.items():
            if one[k1][1] == one[k2][0]:
                c = compose_conjunctions(d, c1, c2)
                if c not in cid:
                    report.add("conj_composite", (k2, k1), "composite not found")
                    continue
                compose1[(k2, k1)] = cid[c]
    id1 = {a: cid[identity_conjunction(d, a)] for a in d.objects}

    two, v_part, h_part, by_ends = {}, {}, {}, {}
    for k1, c1 in conj.items():
        for k2, c2 in conj.items():
            if one[k1] != one[k2]:
                continue
            a, b = one[k1]
            for s in d.squares_with(Boundary(d.h_id[a], c2.f, c1.f, d.h_id[b])):
                name = f"{s}@{k1}=>{k2}"
                two[name] = (k1, k2)
                v_part[name] = s
                h_part[name] = globular_mate(d, c1, c2, s)
                by_ends[(k1, k2, s)] = name

    vcomp2 = {}
    for x, (k1, k2) in two.items():
        for y, (k2b, k3) in two.items():
            if k2b == k2:
                vcomp2[(y, x)] = by_ends[(k1, k3, hcomp(d, v_part[y], v_part[x]))]
    hcomp2 = {}
    for x, (k1, k2) in two.items():
        for y, (l1, l2) in two.items():
            if (l1, k1) in compose1 and (l2, k2) in compose1:
                s = vcomp(d, v_part[x], v_part[y])
                hcomp2[(y, x)] = by_ends[(compose1[(l1, k1)], compose1[(l2, k2)], s)]
    id2 = {k: by_ends[(k, k, vid(d, c.f))] for k, c in conj.items()}
    k2c = TwoCategory(objects=tuple(d.objects), one_cells=one, two_cells=two,
                      compose1=compose1, id1=id1, vcomp2=vcomp2, hcomp2=hcomp2, id2=id2)

    # mates of composites are composites of mates, with the h-parts reversed
    for (y, x), c in vcomp2.items():
        if vcomp(d, h_part[y], h_part[x]) != h_part[c]:
            report.add("conj_mate_functoriality", (x, y), "vertical")
    for (y, x), c in hcomp2.items():
        if hcomp(d, h_part[y], h_part[x]) != h_part[c]:
            report.add("conj_mate_functoriality", (x, y), "horizontal")
    report.extend(validate_2category(k2c))
    return ConjData(k2c, conj, v_part, h_part, report.sorted())


def conj_2category(d: DoubleCategory) -> TwoCategory:
    return conj_data(d).two


# ---------------------------------------------------------------------------
# 2-of-3


def check_adjunction(k: TwoCategory, adj: Adjunction2) -> bool:
    """Triangle identities for ``left ⊣ right`` in ``k``."""
    L, R = adj.left, adj.right
    t1 = k.vcomp2.get((k.whisker_right(adj.counit, L), k.whisker_left(L, adj.unit)))
    t2 = k.vcomp2.get((k.whisker_left(R, adj.counit), k.whisker_right(adj.unit, R)))
    return t1 == k.id2[L] and t2 == k.id2[R]


def adjunction_from(d, p: CompanionPair, c: Conjunction) -> Adjunction2:
    a, b = d.v_arrows[p.f]
    unit = companion_mate(d, p, identity_pair(d, a), c.eta, MateDir.TO_BETA,
                          (d.v_id[a], d.v_id[a]))
    counit = companion_mate(d, identity_pair(d, b), p, c.eps, MateDir.TO_BETA,
                            (d.v_id[b], d.v_id[b]))
    return Adjunction2(p.f_prime, c.g, unit, counit)


def conjunction_from(d, p: CompanionPair, adj: Adjunction2) -> Conjunction:
    a, b = d.v_arrows[p.f]
    eta = companion_mate(d, p, identity_pair(d, a), adj.unit, MateDir.TO_ALPHA,
                         (d.h_id[a], adj.right))
    eps = companion_mate(d, identity_pair(d, b), p, adj.counit, MateDir.TO_ALPHA,
                         (adj.right, d.h_id[b]))
    return Conjunction(p.f, adj.right, eta, eps)


def companion_from(d, c: Conjunction, adj: Adjunction2) -> CompanionPair:
    fp = adj.left
    psi = vcomp(d, adj.unit, hcomp(d, hid(d, fp), c.eps))
    phi = vcomp(d, hcomp(d, c.eta, hid(d, fp)), adj.counit)
    return CompanionPair(c.f, fp, phi, psi)


def third_from_two(d: DoubleCategory, companion: CompanionPair | None = None,
                   conjunction: Conjunction | None = None,
                   adjunction: Adjunction2 | None = None):
    """Given two of (companion f ≅ f', conjunction f ⧏ g, adjunction f' ⊣ g
    in H(D)), build the third."""
    given = [x is not None for x in (companion, conjunction, adjunction)]
    if sum(given) != 2:
        raise IncompatibleData("exactly two structures must be given")
    hd = horizontal_2category(d)
    if companion is not None and not check_companion_safe(d, companion):
        raise IncompatibleData(f"{companion} is not a companion pair")
    if conjunction is not None and not check_conjunction(d, conjunction):
        raise IncompatibleData(f"{conjunction} is not a conjunction")
    if adjunction is not None:
        if not _adjunction_shape(hd, adjunction) or not check_adjunction(hd, adjunction):
            raise IncompatibleData(f"{adjunction} is not an adjunction in H(D)")
    if companion is not None and conjunction is not None:
        if companion.f != conjunction.f:
            raise IncompatibleData("companion and conjunction have different vertical arrows")
        out = adjunction_from(d, companion, conjunction)
        assert check_adjunction(hd, out)
        return out
    if companion is not None:
        if companion.f_prime != adjunction.left:
            raise IncompatibleData("companion and adjunction disagree on f'")
        out = conjunction_from(d, companion, adjunction)
        assert check_conjunction(d, out)
        return out
    if conjunction.g != adjunction.right:
        raise IncompatibleData("conjunction and adjunction disagree on g")
    if d.h_arrows[adjunction.left] != d.v_arrows[conjunction.f]:
        raise IncompatibleData("adjunction's left adjoint is not parallel to f")
    out = companion_from(d, conjunction, adjunction)
    from .companions import check_companion
    assert check_companion(d, out)
    return out


def check_companion_safe(d, p) -> bool:
    from .companions import check_companion
    try:
        return check_companion(d, p)
    except BoundaryMismatch:
        return False


def _adjunction_shape(k: TwoCategory, adj: Adjunction2) -> bool:
    if adj.left not in k.one_cells or adj.right not in k.one_cells:
        return False
    a, b = k.one_cells[adj.left]
    if k.one_cells[adj.right] != (b, a):
        return False
    return (k.two_cells.get(adj.unit) == (k.id1[a], k.compose1[(adj.right, adj.left)])
            and k.two_cells.get(adj.counit) == (k.compose1[(adj.left, adj.right)], k.id1[b]))


def cyclic_consistency(d, p: CompanionPair, c: Conjunction) -> ValidationReport:
    """Rebuild each structure from the other two; all must agree exactly."""
    r = ValidationReport()
    adj = third_from_two(d, companion=p, conjunction=c)
    c2 = third_from_two(d, companion=p, adjunction=adj)
    p2 = third_from_two(d, conjunction=c, adjunction=adj)
    if c2 != c:
        r.add("cyclic_conjunction", (p.f, c.g), f"{c2} != {c}")
    if p2 != p:
        r.add("cyclic_companion", (p.f, p.f_prime), f"{p2} != {p}")
    if third_from_two(d, companion=p2, conjunction=c2) != adj:
        r.add("cyclic_adjunction", (p.f, c.g))
    return r


# ---------------------------------------------------------------------------
# base change


@dataclass(frozen=True)
class MateTable:
    """Six transformations in a 3×2 layout with invertibility flags.

    Column 1: ι^⋆f^* → f^*ι^⋆, f^*ι_⋆ → ι_⋆f^*, ι_⋆f_* → f_*ι_⋆.
    Column 2: f^*ι^⋆ → ι^⋆f^*, ι^⋆f_* → f_*ι^⋆, f_*ι_⋆ → ι_⋆f_*.
    Rows 1 and 3 are globular, so invertibility is decidable; the middle
    row is not globular and its flag is ``None``.
    """

    cells: tuple  # ((r1c1, r1c2), (r2c1, r2c2), (r3c1, r3c2)); None for a missing column
    invertible: tuple
    linkage_ok: bool


def base_change_table(d: DoubleCategory, conj_iota, conj_f_src: Conjunction,
                      conj_f_dst: Conjunction, seed, seed_right=None) -> MateTable:
    """Mate table of a pair of base-change situations compared along ι.

    ``conj_f_src = f^*_C ⧏ f_*^C`` and ``conj_f_dst = f^*_D ⧏ f_*^D``;
    ``conj_iota`` is ``(ι_A, ι_B)`` with ``ι_B: C_B → D_B`` and
    ``ι_A: C_A → D_A``, or a single conjunction used for both.  ``seed`` is
    the v-globular cell ι^⋆_A f^*_C → f^*_D ι^⋆_B (right side ι_A∘f_C, left
    side f_D∘ι_B); ``seed_right`` the opposite one for the second column.
    """
    if isinstance(conj_iota, Conjunction):
        iota_a = iota_b = conj_iota
    else:
        iota_a, iota_b = conj_iota
    fc, fd = conj_f_src, conj_f_dst
    va = d.v_arrows
    if not (va[fc.f][0] == va[iota_b.f][0] and va[fc.f][1] == va[iota_a.f][0]
            and va[fd.f][0] == va[iota_b.f][1] and va[fd.f][1] == va[iota_a.f][1]):
        raise ShapeMismatch("the four conjunctions do not form a base-change square")
    left1 = d.v_compose[(fd.f, iota_b.f)]
    right1 = d.v_compose[(iota_a.f, fc.f)]
    src, tgt = va[fc.f][0], va[fd.f][1]

    def column1(t1):
        if d.boundary(t1) != Boundary(d.h_id[src], left1, right1, d.h_id[tgt]):
            raise ShapeMismatch(f"{t1} is not a cell ι^⋆f^* → f^*ι^⋆")
        t3 = conj_mate(d, iota_a, iota_b, t1, MateDir.TO_BETA, (fd.f, fc.f))
        t5 = conj_mate(d, fc, fd, t3, MateDir.TO_BETA,
                       (d.v_id[va[fd.f][1]], d.v_id[va[fc.f][0]]))
        return t1, t3, t5

    def column2(t2):
        if d.boundary(t2) != Boundary(d.h_id[src], right1, left1, d.h_id[tgt]):
            raise ShapeMismatch(f"{t2} is not a cell f^*ι^⋆ → ι^⋆f^*")
        t4 = conj_mate(d, fd, fc, t2, MateDir.TO_BETA, (iota_a.f, iota_b.f))
        t6 = conj_mate(d, iota_b, iota_a, t4, MateDir.TO_BETA,
                       (d.v_id[va[iota_a.f][1]], d.v_id[va[iota_b.f][0]]))
        return t2, t4, t6

    c1 = column1(seed)
    c2 = column2(seed_right) if seed_right is not None else (None, None, None)
    cells = tuple((c1[r], c2[r]) for r in range(3))

    def inv(r, s):
        if s is None or r == 1:
            return None
        return (v_inverse(d, s) if r == 0 else h_inverse(d, s)) is not None

    invertible = tuple((inv(r, cells[r][0]), inv(r, cells[r][1])) for r in range(3))
    linkage = all(invertible[0][c] == invertible[2][c]
                  for c in range(2) if cells[0][c] is not None)
    return MateTable(cells, invertible, linkage)
