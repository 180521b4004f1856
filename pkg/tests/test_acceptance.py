"""Acceptance criteria 1-10.  Each test records a PASS/FAIL line that is
printed in the terminal summary."""

import functools
import itertools
import time

from cli_matrix import MATRIX, check_output, run
from conftest import ACCEPTANCE, columns_first, compatible_2x2
from dblcat import companions as cp
from dblcat import conjunctions as cj
from dblcat import constructions as C
from dblcat import dslio
from dblcat import psfunctor as ps
from dblcat.companions import MateDir
from dblcat.constructions import (COHERENT_PSFUNCTORS, MUTANT_DOUBLE_FIXTURES,
                                  MUTANT_PSFUNCTORS, VALID_DOUBLE_FIXTURES, fixture, quin,
                                  quintet_cell)
from dblcat.core import (hid, horizontal_2category, oid, validate, validate_2category,
                         vcomp, vertical_2category, vid)
from dblcat.pasting import PastingGrid, column, paste, row

QUINTET_FIXTURES = ("TERMINAL", "POS2_QUIN", "DELOOP_QUIN", "TWOGROUP_QUIN", "Z2_GROUPOID_QUIN")


def criterion(n, desc):
    def wrap(fn):
        @functools.wraps(fn)
        def run_it():
            ACCEPTANCE[n] = (False, desc)
            fn()
            ACCEPTANCE[n] = (True, desc)
            print(f"criterion {n}: PASS  {desc}")
        return run_it
    return wrap


@criterion(1, "axiom suite: valid fixtures clean, every mutant names its family, < 10 s")
def test_c01_axiom_suite():
    t0 = time.perf_counter()
    for name in ("TERMINAL", "WALKING_ARROW_SQ", "POS2_QUIN"):
        assert validate(fixture(name)).violations == [], name
    for name, family in MUTANT_DOUBLE_FIXTURES.items():
        r = validate(fixture(name))
        assert family in r.families, (name, r.families)
    for name, family in MUTANT_PSFUNCTORS.items():
        r = ps.check_double_pseudofunctor(fixture(name))
        assert family in r.families, (name, r.families)
    assert time.perf_counter() - t0 < 10


@criterion(2, "quintets: H(quin K) = V(quin K) = K for POS2, quin(terminal) is terminal")
def test_c02_quintet_identities():
    k = C.pos2()
    d = quin(k)
    for two in (horizontal_2category(d), vertical_2category(d)):
        assert two.relabel(two={s: quintet_cell(d, s) for s in two.two_cells}) == k
    t = quin(C.terminal_2category())
    assert (len(t.objects), len(t.v_arrows), len(t.h_arrows), len(t.squares)) == (1, 1, 1, 1)
    assert validate(t).ok


def _companion_oracle(d, f):
    a, b = d.v_arrows[f]
    hits = []
    for phi, bp in d.squares.items():
        if (bp.left, bp.right, bp.bottom) != (f, d.v_id[b], d.h_id[b]):
            continue
        for psi, bq in d.squares.items():
            if (bq.top, bq.left, bq.right, bq.bottom) == (d.h_id[a], d.v_id[a], f, bp.top) \
                    and d.sq_vcomp.get((psi, phi)) == d.sq_id_of_v[f] \
                    and d.sq_hcomp.get((psi, phi)) == d.sq_id_of_h[bp.top]:
                hits.append((bp.top, phi, psi))
    return hits


@criterion(3, "companion calculus on POS2_QUIN: brute-force companions, mate round trips, "
              "iso inverses, < 30 s")
def test_c03_companion_calculus():
    t0 = time.perf_counter()
    d = fixture("POS2_QUIN")
    pairs = []
    for f in sorted(d.v_arrows):
        oracle = _companion_oracle(d, f)
        assert oracle, f
        found = cp.find_companions(d, f)
        assert {(p.f_prime, p.phi, p.psi) for p in found} == set(oracle)
        pairs += found
    n = 0
    for pf, pg in itertools.product(pairs, repeat=2):
        for s in sorted(d.squares):
            b = d.squares[s]
            for fac in cp.mate_factorizations(d, pf, pg, s, MateDir.TO_BETA):
                beta = cp.companion_mate(d, pf, pg, s, MateDir.TO_BETA, fac)
                assert cp.companion_mate(d, pf, pg, beta, MateDir.TO_ALPHA,
                                         (b.top, b.bottom)) == s
                n += 1
            for fac in cp.mate_factorizations(d, pf, pg, s, MateDir.TO_ALPHA):
                alpha = cp.companion_mate(d, pf, pg, s, MateDir.TO_ALPHA, fac)
                assert cp.companion_mate(d, pf, pg, alpha, MateDir.TO_BETA,
                                         (b.left, b.right)) == s
                n += 1
    assert n > 0
    for p1, p2 in itertools.product(pairs, repeat=2):
        if p1.f == p2.f:
            iso = cp.companion_iso(d, p1, p2)
            inv = cp.companion_iso_inverse(d, p1, p2)
            assert vcomp(d, iso, inv) == hid(d, p1.f_prime)
            assert vcomp(d, inv, iso) == hid(d, p2.f_prime)
    assert time.perf_counter() - t0 < 30


@criterion(4, "conjunction calculus: const0 has one conjoint (!), walking arrow matches "
              "invertibility, conj mates round-trip, mate of identity is identity")
def test_c04_conjunction_calculus():
    d = fixture("POS2_QUIN")
    cs = cj.find_conjoints(d, "const0")
    assert [(c.f, c.g) for c in cs] == [("const0", "!")]

    cat = C.walking_arrow()
    sq = C.square_category(cat)
    inverses = {g for g in cat.arrows if cat.compose.get((g, "u")) == "id0"
                and cat.compose.get(("u", g)) == "id1"}
    assert {c.g for c in cj.find_conjoints(sq, "u")} == inverses == set()
    assert ("u" in C.invertible_arrows(cat)) is False

    allc = cj.all_conjunctions(d)
    n = 0
    for c1, c2 in itertools.product(allc, repeat=2):
        for s in sorted(d.squares):
            b = d.squares[s]
            for fac in cj.conj_mate_factorizations(d, c1, c2, s, MateDir.TO_BETA):
                beta = cj.conj_mate(d, c1, c2, s, MateDir.TO_BETA, fac)
                assert cj.conj_mate(d, c1, c2, beta, MateDir.TO_ALPHA, (b.top, b.bottom)) == s
                n += 1
            for fac in cj.conj_mate_factorizations(d, c1, c2, s, MateDir.TO_ALPHA):
                alpha = cj.conj_mate(d, c1, c2, s, MateDir.TO_ALPHA, fac)
                assert cj.conj_mate(d, c1, c2, alpha, MateDir.TO_BETA, (b.left, b.right)) == s
                n += 1
    assert n > 0
    for c in allc:
        assert cj.globular_mate(d, c, c, vid(d, c.f)) == hid(d, c.g)


@criterion(5, "2-of-3 on POS2_QUIN: adjunctions satisfy the triangle identities, "
              "cyclic consistency holds")
def test_c05_two_of_three():
    d = fixture("POS2_QUIN")
    hd = horizontal_2category(d)
    n = 0
    for c in cj.all_conjunctions(d):
        for p in cp.find_companions(d, c.f):
            adj = cj.third_from_two(d, companion=p, conjunction=c)
            assert cj.check_adjunction(hd, adj)
            assert cj.cyclic_consistency(d, p, c).ok
            n += 1
    assert n == 5


@criterion(6, "Str and Conj are 2-categories on all fixtures; quintet inclusion bijective")
def test_c06_str_conj():
    for name in VALID_DOUBLE_FIXTURES:
        d = fixture(name)
        assert validate_2category(cp.str_2category(d)).ok, name
        assert validate_2category(cj.conj_2category(d)).ok, name
    for name in QUINTET_FIXTURES:
        r = cp.quin_str_inclusion(fixture(name))
        assert r.ok, (name, r.report.families)


@criterion(7, "pseudofunctor coherence: coherent fixtures clean, single-entry mutations "
              "caught, composites coherent")
def test_c07_psfunctor_coherence():
    for name in COHERENT_PSFUNCTORS:
        assert ps.check_double_pseudofunctor(fixture(name)).ok, name
    for name in VALID_DOUBLE_FIXTURES:
        assert ps.check_double_pseudofunctor(ps.identity_psfunctor(fixture(name))).ok
    for name in MUTANT_PSFUNCTORS:
        assert not ps.check_double_pseudofunctor(fixture(name)).ok
    F = fixture("PSF_ID_TWOGROUP")
    for table in ("unit_h", "unit_v", "comp_v", "comp_h"):
        for key, sq in getattr(F, table).items():
            for other in F.cod.squares_with(F.cod.squares[sq]):
                if other != sq:
                    G = F.replace(**{table: {**getattr(F, table), key: other}})
                    assert not ps.check_double_pseudofunctor(G).ok
    endos = [fixture(n) for n in COHERENT_PSFUNCTORS]
    for G, H in itertools.product(endos, repeat=2):
        if H.cod is G.dom:
            assert ps.check_double_pseudofunctor(ps.compose_psfunctors(G, H)).ok


@criterion(8, "mate preservation: all eligible POS2_QUIN cells under coherent endofunctors, "
              "a failure under each mutant")
def test_c08_mate_preservation():
    def results(F):
        d = F.dom
        cs = cj.all_conjunctions(d)
        return [ps.mate_preservation_check(F, c1, c2, s, factors=fac)
                for c1, c2 in itertools.product(cs, repeat=2)
                for s, fac in ps.eligible_mate_cells(d, c1, c2)]

    checked = 0
    for name in COHERENT_PSFUNCTORS:
        F = fixture(name)
        if F.dom is fixture("POS2_QUIN"):
            res = results(F)
            assert res and all(res), name
            checked += 1
    assert checked == 3
    for name in MUTANT_PSFUNCTORS:
        assert not all(results(fixture(name))), name


@criterion(9, "pasting: rows-first = columns-first on every compatible 2x2 grid, "
              "identity grids give identities")
def test_c09_pasting():
    for name in VALID_DOUBLE_FIXTURES:
        d = fixture(name)
        for g in compatible_2x2(d):
            assert paste(d, g) == columns_first(d, g)
        for a in d.objects:
            assert paste(d, PastingGrid(2, 2, [oid(d, a)] * 4)) == oid(d, a)
        for (g2, g1), g in d.v_compose.items():
            assert paste(d, column(vid(d, g1), vid(d, g2))) == vid(d, g)
        for (f2, f1), f in d.h_compose.items():
            assert paste(d, row(hid(d, f1), hid(d, f2))) == hid(d, f)


@criterion(10, "I/O: parse/serialize identity on fixtures and CLI outputs, exit codes on "
               "a matrix of >= 12 invocations")
def test_c10_io():
    for name in C.FixtureName:
        doc = dslio.to_document(fixture(name))
        text = dslio.serialize(doc)
        assert dslio.parse(text) == doc and dslio.serialize(dslio.parse(text)) == text
    assert len(MATRIX) >= 12
    for argv, code in MATRIX:
        got, out, _ = run(argv)
        assert got == code, argv
        assert check_output(out), argv
