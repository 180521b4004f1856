import itertools

import pytest
from hypothesis import given, settings, strategies as st

from dblcat import constructions as C
from dblcat.constructions import MUTANT_DOUBLE_FIXTURES, VALID_DOUBLE_FIXTURES, fixture
from dblcat.core import (Boundary, compose_h, compose_v, h_inverse, hcomp, hid, identities, oid,
                         v_inverse, validate, validate_2category, validate_category, vcomp, vid)
from dblcat.errors import MissingEntry, NotComposable, UnknownCell


@pytest.mark.parametrize("name", VALID_DOUBLE_FIXTURES)
def test_valid_fixtures_have_empty_reports(name):
    assert validate(fixture(name)).violations == []


@pytest.mark.parametrize("name,family", sorted(MUTANT_DOUBLE_FIXTURES.items()))
def test_mutants_name_their_family(name, family):
    r = validate(fixture(name))
    assert not r.ok
    assert family in r.families


def test_interchange_mutant_breaks_only_interchange():
    r = validate(fixture("MUTANT_INTERCHANGE"))
    assert r.families == ["interchange"]
    # witnesses are reported in a stable order
    assert r.violations == sorted(r.violations)


def test_report_is_deterministic():
    a = validate(fixture("MUTANT_BOUNDARY"))
    b = validate(C._build("MUTANT_BOUNDARY"))
    assert a.violations == b.violations


@pytest.mark.parametrize("k", [C.pos2(), C.two_group(), C.z2_groupoid(), C._semilattice3(),
                               C.terminal_2category(), C.co_dual(C.pos2())])
def test_two_categories_validate(k):
    assert validate_2category(k).ok


def test_noncommutative_deloop_fails_interchange():
    # a monoid where non-units are left zeros: x*y = x unless x is the unit
    m = lambda x, y: y if x == "e" else x  # noqa: E731
    k = C.deloop(("e", "a", "b"), m, "e")
    r = validate_2category(k)
    assert not r.ok


@pytest.mark.parametrize("c", [C.walking_arrow(), C.walking_iso(), C.one_category()])
def test_categories_validate(c):
    assert validate_category(c).ok


def test_category_with_bad_identity_is_reported():
    c = C.walking_arrow()
    bad = C.Category(c.objects, c.arrows, {**c.compose, ("u", "id0"): "id0"}, c.identities)
    assert not validate_category(bad).ok


def test_composition_errors():
    d = fixture("POS2_QUIN")
    with pytest.raises(NotComposable):
        compose_v(d, "!", "!")
    with pytest.raises(UnknownCell):
        hcomp(d, "nope", "nope")
    a = d.sq_id_of_h["!"]
    with pytest.raises(NotComposable):
        vcomp(d, a, d.sq_id_of_h["const0"])
    broken = C.mutate(d, "v_compose", ("!", "id_P"), None)
    del broken.v_compose[("!", "id_P")]
    with pytest.raises(MissingEntry):
        compose_v(broken, "!", "id_P")


def test_identities_agree():
    for name in VALID_DOUBLE_FIXTURES:
        d = fixture(name)
        for a in d.objects:
            va, ha, sq = identities(d, a)
            assert sq == oid(d, a) == hid(d, ha) == vid(d, va)


def _inverse_oracle(d, alpha, comp, unit_of):
    """All squares that invert ``alpha`` under ``comp``, by scanning every square."""
    out = []
    for s in d.squares:
        x, y = comp.get((alpha, s)), comp.get((s, alpha))
        if x is not None and y is not None and x == unit_of(d.squares[alpha], True) \
                and y == unit_of(d.squares[alpha], False):
            out.append(s)
    return out


@pytest.mark.parametrize("name", ["POS2_QUIN", "TWOGROUP_QUIN", "WALKING_ISO_SQ", "Z2_GROUPOID_QUIN"])
def test_inverses_match_brute_force(name):
    d = fixture(name)
    for s in d.squares:
        if d.is_h_globular(s):
            oracle = _inverse_oracle(d, s, d.sq_vcomp,
                                     lambda b, first: d.sq_id_of_h[b.top if first else b.bottom])
            assert (h_inverse(d, s) is not None) == bool(oracle)
            if oracle:
                assert h_inverse(d, s) in oracle
        if d.is_v_globular(s):
            oracle = _inverse_oracle(d, s, d.sq_hcomp,
                                     lambda b, first: d.sq_id_of_v[b.left if first else b.right])
            assert (v_inverse(d, s) is not None) == bool(oracle)


def test_two_categories_of_double_category():
    from dblcat.core import horizontal_2category, vertical_2category
    for name in VALID_DOUBLE_FIXTURES:
        d = fixture(name)
        assert validate_2category(horizontal_2category(d)).ok
        assert validate_2category(vertical_2category(d)).ok


# property tests over random composable configurations

POS = fixture("POS2_QUIN")
SQUARES = sorted(POS.squares)


@st.composite
def h_chain(draw, d=POS, n=3):
    s = draw(st.sampled_from(sorted(d.squares)))
    out = [s]
    for _ in range(n - 1):
        nxt = d.by_left.get(d.squares[out[-1]].right)
        out.append(draw(st.sampled_from(nxt)))
    return out


@st.composite
def v_chain(draw, d=POS, n=3):
    s = draw(st.sampled_from(sorted(d.squares)))
    out = [s]
    for _ in range(n - 1):
        out.append(draw(st.sampled_from(d.by_top.get(d.squares[out[-1]].bottom))))
    return out


@given(h_chain())
def test_hcomp_associative(ch):
    a, b, c = ch
    assert hcomp(POS, hcomp(POS, a, b), c) == hcomp(POS, a, hcomp(POS, b, c))


@given(v_chain())
def test_vcomp_associative(ch):
    a, b, c = ch
    assert vcomp(POS, vcomp(POS, a, b), c) == vcomp(POS, a, vcomp(POS, b, c))


@given(st.sampled_from(SQUARES))
def test_units(s):
    b = POS.squares[s]
    assert hcomp(POS, vid(POS, b.left), s) == s == hcomp(POS, s, vid(POS, b.right))
    assert vcomp(POS, hid(POS, b.top), s) == s == vcomp(POS, s, hid(POS, b.bottom))


@settings(max_examples=200)
@given(st.data())
def test_interchange(data):
    a = data.draw(st.sampled_from(SQUARES))
    ba = POS.squares[a]
    b = data.draw(st.sampled_from(POS.by_left[ba.right]))
    c = data.draw(st.sampled_from(POS.by_top[ba.bottom]))
    bb, bc = POS.squares[b], POS.squares[c]
    x = data.draw(st.sampled_from(POS.by_top_left[(bb.bottom, bc.right)]))
    assert vcomp(POS, hcomp(POS, a, b), hcomp(POS, c, x)) == \
        hcomp(POS, vcomp(POS, a, c), vcomp(POS, b, x))


def test_hcomp_boundary_matches_arrows():
    for (a, b), s in itertools.islice(POS.sq_hcomp.items(), 2000):
        ba, bb = POS.squares[a], POS.squares[b]
        assert POS.squares[s] == Boundary(compose_h(POS, bb.top, ba.top), ba.left, bb.right,
                                          compose_h(POS, bb.bottom, ba.bottom))
