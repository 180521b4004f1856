"""Builders: quintets, commutative-square double categories, transpose, fixtures."""

from __future__ import annotations

import itertools
from enum import Enum

from .core import (Boundary, Category, DoubleCategory, TwoCategory, validate,
                   validate_2category)
from .errors import UnknownFixture


def quintet_id(top, bottom, left, right, cell) -> str:
    """Canonical id of the quintet ``(f, g, h, k, α)`` with ``α: k∘f ⇒ g∘h``."""
    return f"({top},{bottom},{left},{right};{cell})"


def quin(k: TwoCategory) -> DoubleCategory:
    """The double category of quintets in ``k``.

    Both arrow classes are the 1-cells of ``k``; a square with boundary
    (top f, left h, right k, bottom g) is a 2-cell ``k∘f ⇒ g∘h``.  Squares
    compose by pasting in ``k``.
    """
    factor: dict[str, list[tuple[str, str]]] = {}
    for (second, first), comp in sorted(k.compose1.items()):
        factor.setdefault(comp, []).append((second, first))

    squares: dict[str, Boundary] = {}
    cell_of: dict[str, str] = {}
    for alpha in sorted(k.two_cells):
        src, tgt = k.two_cells[alpha]
        for (kk, f) in factor.get(src, ()):
            for (g, h) in factor.get(tgt, ()):
                sid = quintet_id(f, g, h, kk, alpha)
                squares[sid] = Boundary(f, h, kk, g)
                cell_of[sid] = alpha

    by_left: dict[str, list[str]] = {}
    by_top: dict[str, list[str]] = {}
    for s, b in squares.items():
        by_left.setdefault(b.left, []).append(s)
        by_top.setdefault(b.top, []).append(s)

    sq_hcomp = {}
    for x, bx in squares.items():
        for y in by_left.get(bx.right, ()):
            by = squares[y]
            # (g2 ◁ α) • (β ▷ f)
            first = k.whisker_right(cell_of[y], bx.top)
            second = k.whisker_left(by.bottom, cell_of[x])
            cell = k.vcomp2[(second, first)]
            sq_hcomp[(x, y)] = quintet_id(
                k.compose1[(by.top, bx.top)], k.compose1[(by.bottom, bx.bottom)],
                bx.left, by.right, cell)
    sq_vcomp = {}
    for x, bx in squares.items():
        for z in by_top.get(bx.bottom, ()):
            bz = squares[z]
            # (γ ▷ h) • (k2 ◁ α)
            first = k.whisker_left(bz.right, cell_of[x])
            second = k.whisker_right(cell_of[z], bx.left)
            cell = k.vcomp2[(second, first)]
            sq_vcomp[(x, z)] = quintet_id(
                bx.top, bz.bottom, k.compose1[(bz.left, bx.left)],
                k.compose1[(bz.right, bx.right)], cell)

    id1 = dict(k.id1)
    return DoubleCategory(
        objects=tuple(sorted(k.objects)),
        v_arrows=dict(k.one_cells),
        h_arrows=dict(k.one_cells),
        squares=squares,
        v_compose=dict(k.compose1),
        h_compose=dict(k.compose1),
        sq_hcomp=sq_hcomp,
        sq_vcomp=sq_vcomp,
        v_id=id1,
        h_id=dict(id1),
        sq_id_of_v={g: quintet_id(id1[a], id1[b], g, g, k.id2[g])
                    for g, (a, b) in k.one_cells.items()},
        sq_id_of_h={f: quintet_id(f, f, id1[a], id1[c], k.id2[f])
                    for f, (a, c) in k.one_cells.items()},
    )


def quintet_cell(d: DoubleCategory, sq_id: str) -> str:
    """The 2-cell component of a quintet square of ``d``."""
    b = d.boundary(sq_id)
    prefix = f"({b.top},{b.bottom},{b.left},{b.right};"
    assert sq_id.startswith(prefix) and sq_id.endswith(")"), sq_id
    return sq_id[len(prefix):-1]


def locally_discrete(c: Category) -> TwoCategory:
    ids = {f: f"id({f})" for f in c.arrows}
    return TwoCategory(
        objects=tuple(sorted(c.objects)),
        one_cells=dict(c.arrows),
        two_cells={ids[f]: (f, f) for f in c.arrows},
        compose1=dict(c.compose),
        id1=dict(c.identities),
        vcomp2={(ids[f], ids[f]): ids[f] for f in c.arrows},
        hcomp2={(ids[g], ids[f]): ids[gf] for (g, f), gf in c.compose.items()},
        id2=ids,
    )


def square_category(c: Category) -> DoubleCategory:
    """Squares exist, uniquely, exactly where ``k∘f = g∘h``."""
    return quin(locally_discrete(c))


def transpose(d: DoubleCategory) -> DoubleCategory:
    """Swap the vertical and horizontal directions."""
    return DoubleCategory(
        objects=tuple(d.objects),
        v_arrows=dict(d.h_arrows),
        h_arrows=dict(d.v_arrows),
        squares={s: Boundary(b.left, b.top, b.bottom, b.right) for s, b in d.squares.items()},
        v_compose=dict(d.h_compose),
        h_compose=dict(d.v_compose),
        sq_hcomp=dict(d.sq_vcomp),
        sq_vcomp=dict(d.sq_hcomp),
        v_id=dict(d.h_id),
        h_id=dict(d.v_id),
        sq_id_of_v=dict(d.sq_id_of_h),
        sq_id_of_h=dict(d.sq_id_of_v),
    )


def co_dual(k: TwoCategory) -> TwoCategory:
    """Reverse the 2-cells of ``k``."""
    return TwoCategory(
        objects=tuple(k.objects),
        one_cells=dict(k.one_cells),
        two_cells={c: (t, s) for c, (s, t) in k.two_cells.items()},
        compose1=dict(k.compose1),
        id1=dict(k.id1),
        vcomp2={(a, b): c for (b, a), c in k.vcomp2.items()},
        hcomp2=dict(k.hcomp2),
        id2=dict(k.id2),
    )


# ---------------------------------------------------------------------------
# small 2-categories


def terminal_2category() -> TwoCategory:
    return TwoCategory(
        objects=("*",),
        one_cells={"1": ("*", "*")},
        two_cells={"1=>1": ("1", "1")},
        compose1={("1", "1"): "1"},
        id1={"*": "1"},
        vcomp2={("1=>1", "1=>1"): "1=>1"},
        hcomp2={("1=>1", "1=>1"): "1=>1"},
        id2={"1": "1=>1"},
    )


def poset_2category(posets, names=None) -> TwoCategory:
    """Order-enriched 2-category of finite posets and monotone maps.

    ``posets`` maps a name to ``(elements, leq)``.  There is at most one
    2-cell ``f ⇒ g``, present when ``f ≤ g`` pointwise.  ``names`` may map
    ``(src, tgt, values)`` to a readable 1-cell id.
    """
    names = names or {}
    maps: dict[str, tuple[str, str, tuple]] = {}
    for a, b in itertools.product(sorted(posets), repeat=2):
        ea, la = posets[a]
        eb, lb = posets[b]
        for values in itertools.product(eb, repeat=len(ea)):
            val = dict(zip(ea, values))
            if all(lb(val[x], val[y]) for x in ea for y in ea if la(x, y)):
                key = (a, b, tuple(values))
                maps[names.get(key, f"{a}->{b}:{','.join(map(str, values))}")] = key

    def le(f, g):
        a, b, vf = maps[f]
        _, _, vg = maps[g]
        return all(posets[b][1](x, y) for x, y in zip(vf, vg))

    def comp(g, f):
        a, _, vf = maps[f]
        b, c, vg = maps[g]
        eb = posets[b][0]
        return (a, c, tuple(vg[eb.index(x)] for x in vf))

    by_key = {v: k for k, v in maps.items()}
    one = {f: (a, b) for f, (a, b, _) in maps.items()}
    compose1 = {(g, f): by_key[comp(g, f)] for f in maps for g in maps if one[f][1] == one[g][0]}
    id1 = {a: by_key[(a, a, tuple(posets[a][0]))] for a in posets}
    cell = lambda f, g: f"{f}=>{g}"  # noqa: E731
    two = {cell(f, g): (f, g) for f in maps for g in maps if one[f] == one[g] and le(f, g)}
    vcomp2 = {(cell(g, h), cell(f, g)): cell(f, h)
              for (f, g) in two.values() for (g2, h) in two.values() if g2 == g}
    hcomp2 = {}
    for (f, f2) in two.values():
        for (g, g2) in two.values():
            if one[f][1] == one[g][0]:
                hcomp2[(cell(g, g2), cell(f, f2))] = cell(compose1[(g, f)], compose1[(g2, f2)])
    return TwoCategory(
        objects=tuple(sorted(posets)),
        one_cells=one,
        two_cells=two,
        compose1=compose1,
        id1=id1,
        vcomp2=vcomp2,
        hcomp2=hcomp2,
        id2={f: cell(f, f) for f in maps},
    )


POS2_NAMES = {
    ("P", "P", (0, 1)): "id_P",
    ("P", "P", (0, 0)): "const0_P",
    ("P", "P", (1, 1)): "const1_P",
    ("P", "Q", (0, 0)): "!",
    ("Q", "P", (0,)): "const0",
    ("Q", "P", (1,)): "const1",
    ("Q", "Q", (0,)): "id_Q",
}


def pos2() -> TwoCategory:
    """Posets P = {0 < 1} and Q = {0}, monotone maps, pointwise order."""
    chain = ((0, 1), lambda x, y: x <= y)
    point = ((0,), lambda x, y: x <= y)
    return poset_2category({"P": chain, "Q": point}, POS2_NAMES)


def deloop(elements, mult, unit) -> TwoCategory:
    """One object, one 1-cell, 2-cells a commutative monoid.

    ``mult(x, y)`` is used for both 2-cell compositions; the result is a
    valid 2-category exactly when the monoid is commutative.
    """
    cells = {e: ("1", "1") for e in elements}
    table = {(y, x): mult(y, x) for x in elements for y in elements}
    return TwoCategory(
        objects=("*",),
        one_cells={"1": ("*", "*")},
        two_cells=cells,
        compose1={("1", "1"): "1"},
        id1={"*": "1"},
        vcomp2=dict(table),
        hcomp2=dict(table),
        id2={"1": unit},
    )


def _semilattice3():
    # e < a < z, join
    order = {"e": 0, "a": 1, "z": 2}
    return deloop(("e", "a", "z"), lambda x, y: max(x, y, key=order.get), "e")


def two_group() -> TwoCategory:
    """Strict 2-group with 1-cells Z/2 = {1, t} and each K(x, x) = Z/2."""
    xs = ("1", "t")
    mul = lambda x, y: "1" if x == y else "t"  # noqa: E731
    cell = lambda x, n: f"{'s' if n else 'id'}_{x}"  # noqa: E731
    two = {cell(x, n): (x, x) for x in xs for n in (0, 1)}
    return TwoCategory(
        objects=("*",),
        one_cells={x: ("*", "*") for x in xs},
        two_cells=two,
        compose1={(y, x): mul(y, x) for x in xs for y in xs},
        id1={"*": "1"},
        vcomp2={(cell(x, m), cell(x, n)): cell(x, (m + n) % 2)
                for x in xs for m in (0, 1) for n in (0, 1)},
        hcomp2={(cell(y, m), cell(x, n)): cell(mul(y, x), (m + n) % 2)
                for x in xs for y in xs for m in (0, 1) for n in (0, 1)},
        id2={x: cell(x, 0) for x in xs},
    )


def z2_groupoid(objects=("x", "y")) -> TwoCategory:
    """Indiscrete groupoid on ``objects`` with every hom-category Z/2.

    The 1-cell from a to b is named ``a>b``; each has 2-cells ``id:a>b`` and
    ``s:a>b``, composing additively in both directions.
    """
    one = {f"{a}>{b}": (a, b) for a in objects for b in objects}
    cell = lambda f, n: f"{'s' if n else 'id'}:{f}"  # noqa: E731
    compose1 = {(f"{b}>{c}", f"{a}>{b}"): f"{a}>{c}"
                for a in objects for b in objects for c in objects}
    return TwoCategory(
        objects=tuple(sorted(objects)),
        one_cells=one,
        two_cells={cell(f, n): (f, f) for f in one for n in (0, 1)},
        compose1=compose1,
        id1={a: f"{a}>{a}" for a in objects},
        vcomp2={(cell(f, m), cell(f, n)): cell(f, (m + n) % 2)
                for f in one for m in (0, 1) for n in (0, 1)},
        hcomp2={(cell(g, m), cell(f, n)): cell(gf, (m + n) % 2)
                for (g, f), gf in compose1.items() for m in (0, 1) for n in (0, 1)},
        id2={f: cell(f, 0) for f in one},
    )


def walking_arrow() -> Category:
    return Category(
        objects=("0", "1"),
        arrows={"id0": ("0", "0"), "id1": ("1", "1"), "u": ("0", "1")},
        compose={("id0", "id0"): "id0", ("id1", "id1"): "id1",
                 ("u", "id0"): "u", ("id1", "u"): "u"},
        identities={"0": "id0", "1": "id1"},
    )


def walking_iso() -> Category:
    return Category(
        objects=("0", "1"),
        arrows={"id0": ("0", "0"), "id1": ("1", "1"), "u": ("0", "1"), "v": ("1", "0")},
        compose={("id0", "id0"): "id0", ("id1", "id1"): "id1",
                 ("u", "id0"): "u", ("id1", "u"): "u",
                 ("v", "id1"): "v", ("id0", "v"): "v",
                 ("v", "u"): "id0", ("u", "v"): "id1"},
        identities={"0": "id0", "1": "id1"},
    )


def one_category() -> Category:
    return Category(objects=("*",), arrows={"1": ("*", "*")},
                    compose={("1", "1"): "1"}, identities={"*": "1"})


def invertible_arrows(c: Category) -> set[str]:
    out = set()
    for f, (a, b) in c.arrows.items():
        for g, (b2, a2) in c.arrows.items():
            if (b2, a2) == (b, a) and c.compose.get((g, f)) == c.identities[a] \
                    and c.compose.get((f, g)) == c.identities[b]:
                out.add(f)
    return out


# ---------------------------------------------------------------------------
# fixtures


class FixtureName(str, Enum):
    TERMINAL = "TERMINAL"
    TERMINAL_2CAT = "TERMINAL_2CAT"
    WALKING_ARROW = "WALKING_ARROW"
    WALKING_ARROW_SQ = "WALKING_ARROW_SQ"
    WALKING_ISO_SQ = "WALKING_ISO_SQ"
    POS2 = "POS2"
    POS2_QUIN = "POS2_QUIN"
    DELOOP_QUIN = "DELOOP_QUIN"
    TWOGROUP = "TWOGROUP"
    TWOGROUP_QUIN = "TWOGROUP_QUIN"
    Z2_GROUPOID = "Z2_GROUPOID"
    Z2_GROUPOID_QUIN = "Z2_GROUPOID_QUIN"
    MUTANT_INTERCHANGE = "MUTANT_INTERCHANGE"
    MUTANT_BOUNDARY = "MUTANT_BOUNDARY"
    MUTANT_IDENTITY = "MUTANT_IDENTITY"
    PSF_ID_POS2 = "PSF_ID_POS2"
    PSF_COLLAPSE_P = "PSF_COLLAPSE_P"
    PSF_COLLAPSE_Q = "PSF_COLLAPSE_Q"
    PSF_ID_TWOGROUP = "PSF_ID_TWOGROUP"
    PSF_COCYCLE = "PSF_COCYCLE"
    PSF_ID_Z2_GROUPOID = "PSF_ID_Z2_GROUPOID"
    MUTANT_PSF_COMP_H = "MUTANT_PSF_COMP_H"
    MUTANT_PSF_COMP_V = "MUTANT_PSF_COMP_V"
    MUTANT_PSF_UNIT_H = "MUTANT_PSF_UNIT_H"


VALID_DOUBLE_FIXTURES = ("TERMINAL", "WALKING_ARROW_SQ", "WALKING_ISO_SQ", "POS2_QUIN",
                         "DELOOP_QUIN", "TWOGROUP_QUIN", "Z2_GROUPOID_QUIN")
MUTANT_DOUBLE_FIXTURES = {
    # name -> axiom family the corruption is meant to break
    "MUTANT_INTERCHANGE": "interchange",
    "MUTANT_BOUNDARY": "boundary",
    "MUTANT_IDENTITY": "identity_square",
}
COHERENT_PSFUNCTORS = ("PSF_ID_POS2", "PSF_COLLAPSE_P", "PSF_COLLAPSE_Q",
                       "PSF_ID_TWOGROUP", "PSF_COCYCLE", "PSF_ID_Z2_GROUPOID")
MUTANT_PSFUNCTORS = {
    "MUTANT_PSF_COMP_H": "h_assoc",
    "MUTANT_PSF_COMP_V": "v_assoc",
    "MUTANT_PSF_UNIT_H": "h_unit",
}


def _replace(d: DoubleCategory, **tables) -> DoubleCategory:
    fields = {f: getattr(d, f) for f in d.__dataclass_fields__}
    for name, patch in tables.items():
        fields[name] = {**fields[name], **patch}
    return DoubleCategory(**fields)


_CACHE: dict[str, object] = {}


def fixture(name):
    """Deterministic named structure (double category, 2-category, category
    or double pseudofunctor)."""
    key = name.value if isinstance(name, FixtureName) else str(name)
    if key not in FixtureName.__members__:
        raise UnknownFixture(f"unknown fixture {key!r}; known: {', '.join(FixtureName.__members__)}")
    if key not in _CACHE:
        _CACHE[key] = _build(key)
    return _CACHE[key]


def _build(key):
    if key == "TERMINAL_2CAT":
        return terminal_2category()
    if key == "TERMINAL":
        return quin(terminal_2category())
    if key == "WALKING_ARROW":
        return walking_arrow()
    if key == "WALKING_ARROW_SQ":
        return square_category(walking_arrow())
    if key == "WALKING_ISO_SQ":
        return square_category(walking_iso())
    if key == "POS2":
        return pos2()
    if key == "POS2_QUIN":
        return quin(pos2())
    if key == "DELOOP_QUIN":
        return quin(_semilattice3())
    if key == "TWOGROUP":
        return two_group()
    if key == "TWOGROUP_QUIN":
        return quin(two_group())
    if key == "Z2_GROUPOID":
        return z2_groupoid()
    if key == "Z2_GROUPOID_QUIN":
        return quin(z2_groupoid())
    if key == "MUTANT_INTERCHANGE":
        d = fixture("DELOOP_QUIN")
        a = quintet_id("1", "1", "1", "1", "a")
        z = quintet_id("1", "1", "1", "1", "z")
        # a⊡a := z keeps ⊡ an associative unital monoid, but it now differs from ⊟
        return _replace(d, sq_hcomp={(a, a): z})
    if key == "MUTANT_BOUNDARY":
        d = fixture("WALKING_ARROW_SQ")
        key0 = min(d.sq_hcomp)
        wrong = next(s for s in sorted(d.squares) if d.squares[s] != d.squares[d.sq_hcomp[key0]])
        return _replace(d, sq_hcomp={key0: wrong})
    if key == "MUTANT_IDENTITY":
        d = fixture("TWOGROUP_QUIN")
        return _replace(d, sq_id_of_h={"1": quintet_id("1", "1", "1", "1", "s_1")})
    from . import psfunctor
    return psfunctor.build_fixture(key)


def mutate(d: DoubleCategory, table: str, key, value) -> DoubleCategory:
    """Copy of ``d`` with one table entry replaced."""
    return _replace(d, **{table: {key: value}})


def check_fixture(name) -> bool:
    obj = fixture(name)
    if isinstance(obj, DoubleCategory):
        return validate(obj).ok
    if isinstance(obj, TwoCategory):
        return validate_2category(obj).ok
    raise TypeError(f"{name} is not a double category or 2-category")
