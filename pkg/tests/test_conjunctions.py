import itertools

import pytest

from dblcat import companions as cp
from dblcat import conjunctions as cj
from dblcat import constructions as C
from dblcat.companions import MateDir
from dblcat.constructions import POS2_NAMES, VALID_DOUBLE_FIXTURES, fixture
from dblcat.core import Boundary, hid, horizontal_2category, validate_2category, vid
from dblcat.errors import IncompatibleData, ShapeMismatch

SETS = {"P": (0, 1), "Q": (0,)}


def galois_oracle():
    """Pairs (f, g) of monotone maps with f(x) ≤ y iff x ≤ g(y)."""
    maps = {name: (a, b, dict(zip(SETS[a], vals))) for (a, b, vals), name in POS2_NAMES.items()}
    out = set()
    for f, (a, b, fv) in maps.items():
        for g, (b2, a2, gv) in maps.items():
            if (b2, a2) == (b, a) and all((fv[x] <= y) == (x <= gv[y])
                                          for x in SETS[a] for y in SETS[b]):
                out.add((f, g))
    return out


def test_conjunctions_of_pos2_are_galois_connections():
    d = fixture("POS2_QUIN")
    found = {(c.f, c.g) for c in cj.all_conjunctions(d)}
    assert found == galois_oracle()
    assert len(found) == 5


def test_const0_has_one_conjoint():
    cs = cj.find_conjoints(fixture("POS2_QUIN"), "const0")
    assert [(c.f, c.g) for c in cs] == [("const0", "!")]


@pytest.mark.parametrize("cat", [C.walking_arrow(), C.walking_iso(), C.one_category()])
def test_square_category_conjoints_are_inverses(cat):
    d = C.square_category(cat)
    inv = C.invertible_arrows(cat)
    for f in cat.arrows:
        gs = {c.g for c in cj.find_conjoints(d, f)}
        expected = {g for g in cat.arrows
                    if cat.compose.get((g, f)) == cat.identities[cat.arrows[f][0]]
                    and cat.compose.get((f, g)) == cat.identities[cat.arrows[f][1]]}
        assert gs == expected
        assert bool(gs) == (f in inv)


def test_walking_arrow_u_has_no_conjoint():
    assert cj.find_conjoints(fixture("WALKING_ARROW_SQ"), "u") == []


@pytest.mark.parametrize("name", VALID_DOUBLE_FIXTURES)
def test_composite_conjunction(name):
    d = fixture(name)
    cs = cj.all_conjunctions(d)
    for c1, c2 in itertools.product(cs, repeat=2):
        if d.v_arrows[c1.f][1] == d.v_arrows[c2.f][0]:
            c = cj.compose_conjunctions(d, c1, c2)
            assert cj.check_conjunction(d, c)


def _conj_roundtrips(d):
    n = 0
    cs = cj.all_conjunctions(d)
    for c1, c2 in itertools.product(cs, repeat=2):
        for s in sorted(d.squares):
            for fac in cj.conj_mate_factorizations(d, c1, c2, s, MateDir.TO_BETA):
                beta = cj.conj_mate(d, c1, c2, s, MateDir.TO_BETA, fac)
                b = d.squares[s]
                assert cj.conj_mate(d, c1, c2, beta, MateDir.TO_ALPHA, (b.top, b.bottom)) == s
                n += 1
    return n


@pytest.mark.parametrize("name", ["POS2_QUIN", "WALKING_ISO_SQ", "TWOGROUP_QUIN"])
def test_conj_mate_roundtrip(name):
    assert _conj_roundtrips(fixture(name)) > 0


@pytest.mark.parametrize("name", VALID_DOUBLE_FIXTURES)
def test_mate_of_identity_is_identity(name):
    d = fixture(name)
    for c in cj.all_conjunctions(d):
        assert cj.globular_mate(d, c, c, vid(d, c.f)) == hid(d, c.g)
    for s, b in d.squares.items():
        c1 = cj.identity_conjunction(d, d.v_arrows[b.right][1])
        c2 = cj.identity_conjunction(d, d.v_arrows[b.left][0])
        assert cj.conj_mate(d, c1, c2, s, MateDir.TO_BETA, (b.left, b.right)) == s


def test_pos2_golden_mate():
    d = fixture("POS2_QUIN")
    c1 = cj.find_conjoints(d, "const0_P")[0]
    c2 = cj.find_conjoints(d, "id_P")[0]
    s = "(id_P,id_P,id_P,const0_P;const0_P=>id_P)"
    assert cj.conj_mate(d, c1, c2, s, MateDir.TO_BETA, ("id_P", "id_P")) == \
        "(id_P,const1_P,id_P,id_P;id_P=>const1_P)"
    # globular version: const0_P ⇒ id_P in V corresponds to id_P ⇒ const1_P in H
    glob = "(id_P,id_P,id_P,const0_P;const0_P=>id_P)"
    assert cj.globular_mate(d, c1, c2, glob) == "(id_P,const1_P,id_P,id_P;id_P=>const1_P)"


@pytest.mark.parametrize("name", VALID_DOUBLE_FIXTURES)
def test_conj_is_a_2category(name):
    data = cj.conj_data(fixture(name))
    assert data.report.ok
    assert validate_2category(data.two).ok


@pytest.mark.parametrize("name,ones,twos", [("POS2_QUIN", 5, 6), ("TWOGROUP_QUIN", 4, 16),
                                            ("WALKING_ARROW_SQ", 2, 2),
                                            ("WALKING_ISO_SQ", 4, 4)])
def test_conj_counts(name, ones, twos):
    k = cj.conj_2category(fixture(name))
    assert (len(k.one_cells), len(k.two_cells)) == (ones, twos)


def _shared(d):
    for c in cj.all_conjunctions(d):
        for p in cp.find_companions(d, c.f):
            yield p, c


@pytest.mark.parametrize("name", VALID_DOUBLE_FIXTURES)
def test_two_of_three(name):
    d = fixture(name)
    hd = horizontal_2category(d)
    for p, c in _shared(d):
        adj = cj.third_from_two(d, companion=p, conjunction=c)
        assert (adj.left, adj.right) == (p.f_prime, c.g)
        assert cj.check_adjunction(hd, adj)
        assert cj.cyclic_consistency(d, p, c).ok


def test_third_from_two_rejects_bad_input():
    d = fixture("POS2_QUIN")
    p = cp.find_companions(d, "const0")[0]
    c = cj.find_conjoints(d, "const0")[0]
    with pytest.raises(IncompatibleData):
        cj.third_from_two(d, companion=p)
    other = cj.find_conjoints(d, "!")[0]
    with pytest.raises(IncompatibleData):
        cj.third_from_two(d, companion=p, conjunction=other)
    adj = cj.third_from_two(d, companion=p, conjunction=c)
    with pytest.raises(IncompatibleData):
        cj.third_from_two(d, conjunction=other, adjunction=adj)


def base_change_instances(d):
    cs = cj.all_conjunctions(d)
    va = d.v_arrows
    for ia, ib, fc, fd in itertools.product(cs, repeat=4):
        left1 = d.v_compose.get((fd.f, ib.f))
        right1 = d.v_compose.get((ia.f, fc.f))
        if left1 is None or right1 is None:
            continue
        if not (va[fc.f][0] == va[ib.f][0] and va[fc.f][1] == va[ia.f][0]
                and va[fd.f][0] == va[ib.f][1] and va[fd.f][1] == va[ia.f][1]):
            continue
        src, tgt = va[fc.f][0], va[fd.f][1]
        seeds = d.squares_with(Boundary(d.h_id[src], left1, right1, d.h_id[tgt]))
        rights = d.squares_with(Boundary(d.h_id[src], right1, left1, d.h_id[tgt]))
        for s in seeds:
            yield (ia, ib), fc, fd, s, (rights[0] if rights else None)


def test_base_change_linkage_exhaustive():
    d = fixture("POS2_QUIN")
    n = 0
    for iota, fc, fd, s, sr in base_change_instances(d):
        t = cj.base_change_table(d, iota, fc, fd, s, sr)
        assert t.linkage_ok
        assert t.invertible[1] == (None, None)
        n += 1
    assert n == 43


def test_base_change_golden():
    d = fixture("POS2_QUIN")
    f = lambda x: cj.find_conjoints(d, x)[0]  # noqa: E731
    t = cj.base_change_table(d, (f("const0_P"), f("id_P")), f("const0_P"), f("id_P"),
                             "(id_P,id_P,id_P,const0_P;const0_P=>id_P)")
    assert t.cells == (("(id_P,id_P,id_P,const0_P;const0_P=>id_P)", None),
                       ("(id_P,const1_P,id_P,const0_P;const0_P=>const1_P)", None),
                       ("(id_P,const1_P,id_P,id_P;id_P=>const1_P)", None))
    assert t.invertible == ((False, None), (None, None), (False, None))
    assert t.linkage_ok


def test_base_change_shape_mismatch():
    d = fixture("POS2_QUIN")
    f = lambda x: cj.find_conjoints(d, x)[0]  # noqa: E731
    with pytest.raises(ShapeMismatch):
        cj.base_change_table(d, f("!"), f("const0_P"), f("id_P"), "x")


@pytest.mark.parametrize("name", VALID_DOUBLE_FIXTURES)
def test_globular_mates_preserve_invertibility(name):
    from dblcat.core import h_inverse, v_inverse
    d = fixture(name)
    cs = cj.all_conjunctions(d)
    for c1, c2 in itertools.product(cs, repeat=2):
        if d.v_arrows[c1.f] != d.v_arrows[c2.f]:
            continue
        a, b = d.v_arrows[c1.f]
        for s in d.squares_with(Boundary(d.h_id[a], c2.f, c1.f, d.h_id[b])):
            m = cj.globular_mate(d, c1, c2, s)
            assert (v_inverse(d, s) is None) == (h_inverse(d, m) is None)
