"""Companion pairs, companion mates, Str(D) and the Quin(Str(D)) inclusion.

A companion pair for a vertical ``f: a → b`` is a horizontal ``f': a → b``
with squares

* ``φ``: top f', left f, right 1_b, bottom 1^b
* ``ψ``: top 1^a, left 1_a, right f, bottom f'

such that ``vcomp(ψ, φ) = 1^f`` (ψ above φ) and ``hcomp(ψ, φ) = 1_{f'}``
(ψ left of φ).  Here ``1_a`` / ``1^a`` are the vertical / horizontal identity
arrows, ``1^g`` the identity square of a vertical g and ``1_f`` that of a
horizontal f.

Mate grids (columns and rows written top-to-bottom and left-to-right):

* toBeta, for α with top j, left f∘i, right m∘g, bottom n::

      [ 1^i ]         [ φ_g ]
      [ ψ_f ]    α    [ 1^m ]

* toAlpha, for β with top g'∘j, left i, right m, bottom n∘f'::

      [ 1_j   ψ_g ]
      [     β     ]
      [ φ_f   1_n ]
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .constructions import quin, quintet_cell
from .core import (Boundary, DoubleCategory, TwoCategory, ValidationReport, compose_h,
                   hcomp, hid, vcomp, vid, validate_2category)
from .errors import (AmbiguousFactorization, BoundaryMismatch, BoundaryNotFactorable,
                     DblCatError, MismatchedVertical, NotComposable)
from .pasting import PastingGrid, column, paste, row


class MateDir(str, Enum):
    TO_BETA = "toBeta"
    TO_ALPHA = "toAlpha"


@dataclass(frozen=True)
class CompanionPair:
    f: str
    f_prime: str
    phi: str
    psi: str


def identity_pair(d: DoubleCategory, a) -> CompanionPair:
    s = vid(d, d.v_id[a])
    return CompanionPair(d.v_id[a], d.h_id[a], s, s)


def _expected(d, f, fp):
    a, b = d.v_arrows[f]
    return (Boundary(fp, f, d.v_id[b], d.h_id[b]),
            Boundary(d.h_id[a], d.v_id[a], f, fp))


def _boundaries_fit(d, p: CompanionPair):
    if p.f not in d.v_arrows or p.f_prime not in d.h_arrows:
        return False
    if d.v_arrows[p.f] != d.h_arrows[p.f_prime]:
        return False
    want_phi, want_psi = _expected(d, p.f, p.f_prime)
    return d.boundary(p.phi) == want_phi and d.boundary(p.psi) == want_psi


def check_companion(d: DoubleCategory, p: CompanionPair) -> bool:
    if not _boundaries_fit(d, p):
        raise BoundaryMismatch(f"{p} does not have companion-pair boundaries")
    return (d.sq_vcomp.get((p.psi, p.phi)) == vid(d, p.f)
            and d.sq_hcomp.get((p.psi, p.phi)) == hid(d, p.f_prime))


def find_companions(d: DoubleCategory, f) -> list[CompanionPair]:
    """All companion pairs for the vertical arrow ``f``, in sorted order."""
    ends = d.v_arrows[f]
    out = []
    for fp in sorted(d.h_arrows):
        if d.h_arrows[fp] != ends:
            continue
        want_phi, want_psi = _expected(d, f, fp)
        for phi in d.squares_with(want_phi):
            for psi in d.squares_with(want_psi):
                p = CompanionPair(f, fp, phi, psi)
                if check_companion(d, p):
                    out.append(p)
    return out


def companion_iso(d: DoubleCategory, p1: CompanionPair, p2: CompanionPair) -> str:
    """The h-globular iso ``f1' ⇒ f2'`` between two companions of one f.

    Raises ``NotInvertible`` if the dual composite fails to invert it, which
    cannot happen for pairs that pass ``check_companion``.
    """
    if p1.f != p2.f:
        raise MismatchedVertical(f"{p1.f} != {p2.f}")
    iso = hcomp(d, p2.psi, p1.phi)
    inv = hcomp(d, p1.psi, p2.phi)
    if vcomp(d, iso, inv) != hid(d, p1.f_prime) or vcomp(d, inv, iso) != hid(d, p2.f_prime):
        from .errors import NotInvertible
        raise NotInvertible(f"companion iso {iso} with candidate inverse {inv}")
    return iso


def companion_iso_inverse(d, p1, p2) -> str:
    return hcomp(d, p1.psi, p2.phi)


def compose_pairs(d: DoubleCategory, p: CompanionPair, q: CompanionPair) -> CompanionPair:
    """Companion pair for ``q.f ∘ p.f`` with horizontal part ``q.f' ∘ p.f'``."""
    if d.v_arrows[p.f][1] != d.v_arrows[q.f][0]:
        raise NotComposable(f"{q.f} after {p.f}")
    psi = paste(d, PastingGrid.from_rows([[p.psi, vid(d, p.f)],
                                          [hid(d, p.f_prime), q.psi]]))
    phi = paste(d, PastingGrid.from_rows([[p.phi, hid(d, q.f_prime)],
                                          [vid(d, q.f), q.phi]]))
    return CompanionPair(d.v_compose[(q.f, p.f)], compose_h(d, q.f_prime, p.f_prime), phi, psi)


# ---------------------------------------------------------------------------
# mates


def mate_grid(d, pf: CompanionPair, pg: CompanionPair, cell, direction, factors):
    """The pasting grid computing the mate of ``cell`` with given factors."""
    direction = MateDir(direction)
    if direction is MateDir.TO_BETA:
        i, m = factors
        return row(column(vid(d, i), pf.psi), cell, column(pg.phi, vid(d, m)))
    j, n = factors
    return column(row(hid(d, j), pg.psi), cell, row(pf.phi, hid(d, n)))


def mate_factorizations(d, pf, pg, cell, direction) -> list[tuple[str, str]]:
    """Every ``(i, m)`` (toBeta) or ``(j, n)`` (toAlpha) matching the cell."""
    b = d.boundary(cell)
    if MateDir(direction) is MateDir.TO_BETA:
        firsts = [i for (f, i), x in d.v_compose.items() if f == pf.f and x == b.left]
        seconds = [m for (m, g), x in d.v_compose.items() if g == pg.f and x == b.right]
    else:
        firsts = [j for (g, j), x in d.h_compose.items() if g == pg.f_prime and x == b.top]
        seconds = [n for (n, f), x in d.h_compose.items() if f == pf.f_prime and x == b.bottom]
    return sorted((x, y) for x in firsts for y in seconds)


def resolve_mate(d, cell, direction, factors, grid_of, candidates):
    """Paste ``grid_of(factors)``; search ``candidates`` when no factors are given."""
    if factors is not None:
        try:
            return paste(d, grid_of(tuple(factors)))
        except DblCatError as e:
            raise BoundaryNotFactorable(f"{cell} with factors {tuple(factors)}: {e}") from None
    results: dict[str, list] = {}
    for fac in candidates:
        try:
            results.setdefault(paste(d, grid_of(fac)), []).append(fac)
        except DblCatError:
            continue
    if not results:
        raise BoundaryNotFactorable(f"{cell} does not have the {MateDir(direction).value} input shape")
    if len(results) > 1:
        facs = sorted(f for fs in results.values() for f in fs)
        raise AmbiguousFactorization(
            f"{cell}: {len(facs)} factorizations give {len(results)} different mates", facs)
    return next(iter(results))


def companion_mate(d: DoubleCategory, pf: CompanionPair, pg: CompanionPair, cell,
                   direction, factors=None) -> str:
    """Mate of ``cell`` under the companions ``pf`` (of f) and ``pg`` (of g).

    toBeta sends α (top j, left f∘i, right m∘g, bottom n) to β (top g'∘j,
    left i, right m, bottom n∘f'); toAlpha is the inverse.  ``factors`` is
    ``(i, m)`` or ``(j, n)``; when omitted all factorizations are tried.
    """
    return resolve_mate(
        d, cell, direction, factors,
        lambda fac: mate_grid(d, pf, pg, cell, direction, fac),
        mate_factorizations(d, pf, pg, cell, direction))


# ---------------------------------------------------------------------------
# Str(D)


@dataclass
class StrData:
    """Str(D) together with the bookkeeping linking it back to D."""

    two: TwoCategory
    pairs: dict[str, CompanionPair]
    h_part: dict[str, str]  # 2-cell id -> h-globular square
    v_part: dict[str, str]  # 2-cell id -> v-globular mate
    report: ValidationReport = field(default_factory=ValidationReport)


def _pair_ids(pairs: list[CompanionPair]) -> dict[str, CompanionPair]:
    seen: dict[str, int] = {}
    out = {}
    for p in pairs:
        base = f"{p.f}~{p.f_prime}"
        n = seen.get(base, 0)
        seen[base] = n + 1
        out[base if n == 0 else f"{base}#{n}"] = p
    return out


def str_data(d: DoubleCategory) -> StrData:
    pairs = _pair_ids([p for f in sorted(d.v_arrows) for p in find_companions(d, f)])
    pid = {p: k for k, p in pairs.items()}
    one = {k: d.v_arrows[p.f] for k, p in pairs.items()}
    report = ValidationReport()

    compose1 = {}
    for kx, x in pairs.items():
        for ky, y in pairs.items():
            if one[kx][1] == one[ky][0]:
                c = compose_pairs(d, x, y)
                if c not in pid:
                    report.add("str_composite", (ky, kx), "composite pair not found")
                    continue
                compose1[(ky, kx)] = pid[c]
    id1 = {a: pid[identity_pair(d, a)] for a in d.objects}

    cid = lambda s, x, y: f"{s}@{x}=>{y}"  # noqa: E731
    two, h_part, v_part = {}, {}, {}
    by_ends: dict = {}
    for kx, x in pairs.items():
        for ky, y in pairs.items():
            if one[kx] != one[ky]:
                continue
            a, b = one[kx]
            glob = Boundary(x.f_prime, d.v_id[a], d.v_id[b], y.f_prime)
            for s in d.squares_with(glob):
                c = cid(s, kx, ky)
                two[c] = (kx, ky)
                h_part[c] = s
                v_part[c] = companion_mate(d, y, x, s, MateDir.TO_ALPHA,
                                           (d.h_id[a], d.h_id[b]))
                by_ends[(kx, ky, s)] = c

    vcomp2 = {}
    for c1, (x, y) in two.items():
        for c2, (y2, z) in two.items():
            if y2 == y:
                vcomp2[(c2, c1)] = by_ends[(x, z, vcomp(d, h_part[c1], h_part[c2]))]
    hcomp2 = {}
    for c1, (x1, y1) in two.items():
        for c2, (x2, y2) in two.items():
            if (x2, x1) in compose1 and (y2, y1) in compose1:
                s = hcomp(d, h_part[c1], h_part[c2])
                hcomp2[(c2, c1)] = by_ends[(compose1[(x2, x1)], compose1[(y2, y1)], s)]
    id2 = {k: by_ends[(k, k, hid(d, p.f_prime))] for k, p in pairs.items()}

    k = TwoCategory(objects=tuple(d.objects), one_cells=one, two_cells=two,
                    compose1=compose1, id1=id1, vcomp2=vcomp2, hcomp2=hcomp2, id2=id2)
    # the v-parts must compose like the h-parts (this is what makes the
    # projection to V(D) a 2-functor)
    for (c2, c1), c in vcomp2.items():
        if hcomp(d, v_part[c2], v_part[c1]) != v_part[c]:
            report.add("str_v_projection", (c1, c2), "vertical composite of mates")
    for (c2, c1), c in hcomp2.items():
        if vcomp(d, v_part[c1], v_part[c2]) != v_part[c]:
            report.add("str_v_projection", (c1, c2), "horizontal composite of mates")
    report.extend(validate_2category(k))
    return StrData(k, pairs, h_part, v_part, report.sorted())


def str_2category(d: DoubleCategory) -> TwoCategory:
    """Objects of D, companion pairs, and mate-pairs of globular squares."""
    return str_data(d).two


def str_projection_report(d: DoubleCategory, data: StrData | None = None) -> ValidationReport:
    """Full-and-faithfulness of the projections Str(D) → H(D) and → V(D)."""
    data = data or str_data(d)
    r = ValidationReport()
    for kx, x in data.pairs.items():
        for ky, y in data.pairs.items():
            if data.two.one_cells[kx] != data.two.one_cells[ky]:
                continue
            a, b = data.two.one_cells[kx]
            cells = data.two.cells_between(kx, ky)
            hs = [data.h_part[c] for c in cells]
            vs = [data.v_part[c] for c in cells]
            want_h = d.squares_with(Boundary(x.f_prime, d.v_id[a], d.v_id[b], y.f_prime))
            want_v = d.squares_with(Boundary(d.h_id[a], y.f, x.f, d.h_id[b]))
            if sorted(hs) != sorted(want_h):
                r.add("str_h_full_faithful", (kx, ky))
            if sorted(vs) != sorted(set(vs)) or sorted(vs) != sorted(want_v):
                r.add("str_v_full_faithful", (kx, ky))
    return r


# ---------------------------------------------------------------------------
# Quin(Str(D)) ↪ D


@dataclass
class DoubleFunctorReport:
    objects: dict
    v_map: dict
    h_map: dict
    sq_map: dict
    report: ValidationReport

    @property
    def ok(self) -> bool:
        return self.report.ok


def quin_str_inclusion(d: DoubleCategory) -> DoubleFunctorReport:
    """The inclusion of Quin(Str(D)) into D, checked for strict functoriality
    and for bijectivity on squares with a given boundary."""
    data = str_data(d)
    q = quin(data.two)
    r = ValidationReport()
    r.extend(data.report, "str:")
    v_map = {k: p.f for k, p in data.pairs.items()}
    h_map = {k: p.f_prime for k, p in data.pairs.items()}
    sq_map = {}
    for s, b in q.squares.items():
        theta = data.h_part[quintet_cell(q, s)]
        sq_map[s] = companion_mate(d, data.pairs[b.left], data.pairs[b.right], theta,
                                   MateDir.TO_ALPHA, (h_map[b.top], h_map[b.bottom]))
        want = Boundary(h_map[b.top], v_map[b.left], v_map[b.right], h_map[b.bottom])
        if d.boundary(sq_map[s]) != want:
            r.add("inclusion_boundary", (s,))

    for (x, y), xy in q.sq_hcomp.items():
        if d.sq_hcomp.get((sq_map[x], sq_map[y])) != sq_map[xy]:
            r.add("inclusion_hcomp", (x, y))
    for (x, y), xy in q.sq_vcomp.items():
        if d.sq_vcomp.get((sq_map[x], sq_map[y])) != sq_map[xy]:
            r.add("inclusion_vcomp", (x, y))
    for g, s in q.sq_id_of_v.items():
        if vid(d, v_map[g]) != sq_map[s]:
            r.add("inclusion_identity", (g,))
    for f, s in q.sq_id_of_h.items():
        if hid(d, h_map[f]) != sq_map[s]:
            r.add("inclusion_identity", (f,))
    for (g2, g1), g in q.v_compose.items():
        if d.v_compose[(v_map[g2], v_map[g1])] != v_map[g]:
            r.add("inclusion_v_compose", (g2, g1))
        if d.h_compose[(h_map[g2], h_map[g1])] != h_map[g]:
            r.add("inclusion_h_compose", (g2, g1))

    # bijective on squares of each boundary of Quin(Str(D))
    fibres: dict = {}
    for s, b in q.squares.items():
        fibres.setdefault(tuple(b), []).append(s)
    seen: set = set()
    for top in data.pairs:
        for bottom in data.pairs:
            for left in data.pairs:
                for right in data.pairs:
                    key = (top, left, right, bottom)
                    ends = q.h_arrows
                    if (ends[top][0] != ends[left][0] or ends[top][1] != ends[right][0]
                            or ends[left][1] != ends[bottom][0] or ends[right][1] != ends[bottom][1]):
                        continue
                    seen.add(key)
                    images = [sq_map[s] for s in fibres.get(key, ())]
                    want = d.squares_with(Boundary(h_map[top], v_map[left], v_map[right], h_map[bottom]))
                    if len(set(images)) != len(images) or sorted(images) != sorted(want):
                        r.add("inclusion_bijective", key,
                              f"{len(images)} quintets vs {len(want)} squares")
    return DoubleFunctorReport({a: a for a in d.objects}, v_map, h_map, sq_map, r.sorted())


# ---------------------------------------------------------------------------
# the unit K → Str(Quin(K))


def canonical_pair(k: TwoCategory, f) -> CompanionPair:
    """In Quin(K) every 1-cell is its own companion with identity 2-cells."""
    from .constructions import quintet_id
    a, b = k.one_cells[f]
    phi = quintet_id(f, k.id1[b], f, k.id1[b], k.id2[f])
    psi = quintet_id(k.id1[a], f, k.id1[a], f, k.id2[f])
    return CompanionPair(f, f, phi, psi)


def quin_str_triangles(k: TwoCategory) -> ValidationReport:
    """Triangle identities for the unit η: K → Str(Quin(K)) and the
    inclusion counit, checked on the constructed data.

    * Quin(K) → Quin(Str(Quin K)) → Quin(K) is the identity on squares.
    * Str(D) → Str(Quin(Str D)) → Str(D) fixes every pair (D = Quin(K)).
    """
    from .constructions import quintet_id
    d = quin(k)
    data = str_data(d)
    pid = {p: n for n, p in data.pairs.items()}
    r = ValidationReport()
    eta1 = {}
    for f in k.one_cells:
        p = canonical_pair(k, f)
        if p not in pid:
            r.add("unit_one_cell", (f,), "canonical pair missing from Str")
            return r
        eta1[f] = pid[p]
    eta2 = {}
    for c, (f, g) in k.two_cells.items():
        a, b = k.one_cells[f]
        sq = quintet_id(f, g, k.id1[a], k.id1[b], c)
        eta2[c] = f"{sq}@{eta1[f]}=>{eta1[g]}"
        if eta2[c] not in data.two.two_cells:
            r.add("unit_two_cell", (c,))
    if not r.ok:
        return r

    inc = quin_str_inclusion(d)
    r.extend(inc.report, "counit:")
    for s, b in d.squares.items():
        f_, g_, h_, k_ = b.top, b.bottom, b.left, b.right
        cell = quintet_cell(d, s)
        image = quintet_id(eta1[f_], eta1[g_], eta1[h_], eta1[k_], eta2[cell])
        if inc.sq_map.get(image) != s:
            r.add("triangle_quin", (s,), f"{image} -> {inc.sq_map.get(image)}")

    # second triangle, on D = Quin(K): each pair P of Str(D) goes to the
    # canonical pair (P, P, id, id) of Quin(Str D), whose image under the
    # inclusion must be P again
    tk = data.two
    for n, p in data.pairs.items():
        cp = canonical_pair(tk, n)
        back = CompanionPair(inc.v_map[n], inc.h_map[n], inc.sq_map[cp.phi], inc.sq_map[cp.psi])
        if back != p:
            r.add("triangle_str", (n,), f"{back} != {p}")
    return r.sorted()
