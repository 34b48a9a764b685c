"""Acceptance criteria 1-10, each checked exactly.

Every criterion collects its failures and prints one ``criterion N: PASS/FAIL``
line.  Criteria with failures that are properties of the source material are
marked ``xfail(strict=True)``; a companion test pins the failure set to the
documented one, so a new failure or an unexpected fix both turn the run red.
"""

from collections import Counter
from fractions import Fraction
from functools import lru_cache

import pytest

from nilgrad.cohomology import h2_dim, h2_dim_bruteforce
from nilgrad.extensions import ExtensionSpec, enumerate_graded_extensions, filiform_chain, fingerprint
from nilgrad.grading import natural_graded_verdict
from nilgrad.liecore import (abelian, centralizer_property, characteristic_sequence, heisenberg, jacobi_violations,
                             quotient_by_last)
from nilgrad.models import (FAMILIES, ModelId, ModelUnavailable, catalog_ids, claimed_charseq, make,
                            undocumented_repairs)
from nilgrad.roots import (borel_nilradical_P_check, build, delta_minus, expected_sum_index, pair_with_sum,
                           proposition1_pair)
from conftest import random_nilpotent

M_RANGE = range(4, 9)


def _report(capsys, n: int, failures: list, detail: str = "") -> None:
    status = "PASS" if not failures else f"FAIL ({len(failures)})"
    with capsys.disabled():
        print(f"\ncriterion {n}: {status}{' - ' + detail if detail else ''}")
        for f in failures[:12]:
            print(f"    {f}")
        if len(failures) > 12:
            print(f"    ... {len(failures) - 12} more")


# -- 1. catalog soundness --------------------------------------------------

@lru_cache(maxsize=None)
def criterion1() -> tuple:
    fails = []
    for mid in catalog_ids(M_RANGE):
        try:
            g = make(mid)
        except ModelUnavailable:
            fails.append((str(mid), "unavailable"))
            continue
        if jacobi_violations(g):
            fails.append((str(mid), "jacobi"))
            continue
        if tuple(characteristic_sequence(g).blocks) != tuple(claimed_charseq(mid)):
            fails.append((str(mid), "charseq"))
        v = natural_graded_verdict(g).verdict
        if v != "naturally graded":
            fails.append((str(mid), v))
    return tuple(fails)


def expected1() -> set:
    out = set()
    for m in M_RANGE:
        for q in (2 * m - 4, 2 * m - 3):
            out.add((f"g22q:m={m},q={q}", "unavailable"))
        for q in (2 * m - 6, 2 * m - 5):
            out.add((f"g5q:m={m},q={q}", "unavailable"))
        if m >= 5:
            out.add((f"g5:m={m}", "not naturally graded"))
            out |= {(f"g5q:m={m},q={q}", "not naturally graded") for q in range(1, 2 * m - 6)}
    return out


@pytest.mark.xfail(strict=True, reason="g5 family is not naturally graded for m >= 5; two top g22q/g5q "
                                       "tower steps have no closing law (see decision ledger)")
def test_criterion_1_catalog_soundness(capsys):
    fails = list(criterion1())
    _report(capsys, 1, fails, f"{len(catalog_ids(M_RANGE))} models, m = 4..8")
    assert fails == []


def test_criterion_1_failures_are_exactly_the_documented_ones():
    assert set(criterion1()) == expected1()


# -- 2. centralizer property ----------------------------------------------

@lru_cache(maxsize=None)
def criterion2() -> tuple:
    fails = []
    claimed_groups = {"cs_2m-1_1_1", "cs_2m-1_2_1", "tower", "cs_2m-1_3_1"}
    for mid in catalog_ids(M_RANGE):
        fam = FAMILIES[mid.family]
        if fam.group not in claimed_groups and mid.family != "Q":
            continue
        try:
            g = make(mid)
        except ModelUnavailable:
            continue                # counted under criterion 1
        v = centralizer_property(g).variant
        if v != "P2":
            fails.append((str(mid), v))
    for n in range(4, 17):
        v = centralizer_property(make("L", n=n)).variant
        if v != "neither":
            fails.append((f"L:n={n}", v))
    return tuple(fails)


def test_criterion_2_centralizer_property(capsys):
    fails = list(criterion2())
    _report(capsys, 2, fails, "catalog models P2, Q P2, L_n (n = 4..16) neither")
    assert fails == []


# -- 3. filiform dichotomy ------------------------------------------------

def test_criterion_3_filiform_dichotomy(capsys):
    chain = filiform_chain(10)
    fails = []
    for d in range(6, 11):
        got = Counter(fingerprint(a) for a in chain[d])
        want = Counter([fingerprint(make("L", n=d - 1))])
        if d % 2 == 0:
            want[fingerprint(make("Q", m=d // 2))] += 1
        if got != want:
            fails.append((d, len(chain[d])))
        p2 = [a for a in chain[d] if centralizer_property(a).variant == "P2"]
        if d % 2 == 0 and (len(p2) != 1 or fingerprint(p2[0]) != fingerprint(make("Q", m=d // 2))):
            fails.append((d, "P2 class is not unique Q"))
    _report(capsys, 3, fails, "dims 6..10 from L_3: {L, Q} even, {L} odd")
    assert fails == []


# -- 4. emptiness ----------------------------------------------------------

def test_criterion_4_emptiness(capsys):
    fails = []
    for m in (4, 5, 6):
        for q in (2, 4):
            fam = (Fraction(q + 1, 2), (2,))
            for base in (make("Q", m=m), make("L", n=2 * m - 1)):
                spec = ExtensionSpec(family=fam, target_nilindex=2 * m - 1)
                n = len(enumerate_graded_extensions(base, None, spec))
                if n:
                    fails.append((base.name, q, n))
    _report(capsys, 4, fails, "Q and L bases, m = 4,5,6, q = 2,4")
    assert fails == []


# -- 5. uniqueness ---------------------------------------------------------

def test_criterion_5_uniqueness(capsys):
    fails = []

    def classes(g, **kw):
        return enumerate_graded_extensions(g, None, ExtensionSpec(**kw))

    for m in (4, 5, 6):
        for t in range(1, m - 1):
            cls = classes(make("Q", m=m), family=(t, (2,)), target_nilindex=2 * m - 1)
            if len(cls) != 1 or fingerprint(cls[0].extended) != fingerprint(make("g2", m=m, t=t)):
                fails.append((f"Q m={m} t={t}", len(cls)))
        cls = classes(make("L", n=2 * m - 1), family=(m - 1, (2,)), target_nilindex=2 * m - 1)
        if len(cls) != 1 or fingerprint(cls[0].extended) != fingerprint(make("g4", m=m)):
            fails.append((f"L m={m}", len(cls)))
        cls = classes(make("s", m=m), target_degree=2 * m - 1, target_nilindex=2 * m - 1,
                      required_charseq=(2 * m - 1, 1, 1), require_P2=True)
        if m == 4:
            want = Counter([fingerprint(make("g_42_1")), fingerprint(make("g3", m=4))])
            if Counter(fingerprint(c.extended) for c in cls) != want:
                fails.append(("s m=4", len(cls)))
        elif len(cls) != 1 or fingerprint(cls[0].extended) != fingerprint(make("g3", m=m)):
            fails.append((f"s m={m}", len(cls)))
    _report(capsys, 5, fails, "Q/t, L/t=m-1, s_4 (two), s_m (one), m = 4,5,6")
    assert fails == []


# -- 6. towers -------------------------------------------------------------

def _tower_ids(m):
    bound = {"g_m0_1kq": 2 * m - 3, "g22q": 2 * m - 3, "g5q": 2 * m - 5}
    for k in (0, 1):
        yield "g_m0_1kq", {"m": m, "k": k}, "g_m0_1k", min(bound["g_m0_1kq"], 4)
    for t in range(1, m - 1):
        yield "g21q", {"m": m, "t": t}, "g21", min(2 * m - 2 * t - 3, 4)
    yield "g22q", {"m": m}, "g22", min(bound["g22q"], 4)
    yield "g5q", {"m": m}, "g5", min(bound["g5q"], 4)


@lru_cache(maxsize=None)
def criterion6() -> tuple:
    fails = []
    for m in (4, 5):
        for fam, params, base, qmax in _tower_ids(m):
            prev = make(base, **params)
            for q in range(1, qmax + 1):
                mid = ModelId.of(fam, q=q, **params)
                try:
                    g = make(mid)
                except ModelUnavailable:
                    fails.append((str(mid), "unavailable"))
                    break
                if quotient_by_last(g) != prev:
                    fails.append((str(mid), "quotient"))
                if tuple(characteristic_sequence(g).blocks) != (2 * m - 1, 2 + q, 1):
                    fails.append((str(mid), "charseq"))
                prev = g
    return tuple(fails)


@pytest.mark.xfail(strict=True, reason="g22q and g5q towers stop early: the printed next step fails Jacobi "
                                       "and no graded cocycle has the claimed sequence")
def test_criterion_6_towers(capsys):
    fails = list(criterion6())
    _report(capsys, 6, fails, "all tower families, m = 4,5, q <= min(bound, 4)")
    assert fails == []


def test_criterion_6_failures_are_exactly_the_documented_ones():
    assert set(criterion6()) == {("g22q:m=4,q=4", "unavailable"), ("g5q:m=4,q=2", "unavailable"),
                                 ("g5q:m=5,q=4", "unavailable")}


# -- 7. tables -------------------------------------------------------------

@lru_cache(maxsize=None)
def criterion7() -> tuple:
    from nilgrad.tables import table_rows
    rows = table_rows(1, range(4, 8)) + table_rows(2, (4, 5), (1, 2, 3))
    unexplained = tuple((r.model, d[0]) for r in rows for d in r.diffs if not d[3])
    explained = sum(1 for r in rows for d in r.diffs if d[3])
    return unexplained, explained, len(rows)


@pytest.mark.xfail(strict=True, reason="Table 2 rows g5q m=4, q=2,3 have no closing law")
def test_criterion_7_tables(capsys):
    fails, explained, n = criterion7()
    _report(capsys, 7, list(fails), f"{n} rows, {explained} type cells differ only by a documented correction")
    assert not fails


def test_criterion_7_failures_are_exactly_the_documented_ones():
    fails, _, _ = criterion7()
    assert {m for m, _ in fails} == {"g5q:m=4,q=2", "g5q:m=4,q=3"}


# -- 8. roots --------------------------------------------------------------

ROOT_TYPES = ([("A", l) for l in range(2, 9)] + [("B", l) for l in range(2, 9)] + [("C", l) for l in range(3, 9)]
              + [("D", l) for l in range(4, 9)] + [("E", 6), ("E", 7), ("E", 8), ("F", 4)])


@lru_cache(maxsize=None)
def criterion8() -> tuple:
    fails = []
    for t, l in ROOT_TYPES:
        rs = build(t, l)
        if proposition1_pair(rs) is None:
            fails.append((rs.name, "no pair"))
        elif pair_with_sum(rs, delta_minus(rs, expected_sum_index(rs))) is None:
            fails.append((rs.name, "sum identity"))
        if not borel_nilradical_P_check(rs).is_P1:
            fails.append((rs.name, "not P1"))
    g2 = build("G", 2)
    if proposition1_pair(g2) is not None:
        fails.append(("G2", "pair found"))
    if borel_nilradical_P_check(g2).is_P1:
        fails.append(("G2", "P1"))
    e8 = build("E", 8)
    if pair_with_sum(e8, delta_minus(e8, 8)) is None:
        fails.append(("E8", "no pair summing to delta - a8"))
    return tuple(fails)


@pytest.mark.xfail(strict=True, reason="B3 and D4 have no middle-height pair with a root sum")
def test_criterion_8_roots(capsys):
    fails = list(criterion8())
    _report(capsys, 8, fails, f"{len(ROOT_TYPES)} types plus G2")
    assert fails == []


def test_criterion_8_failures_are_exactly_the_documented_ones():
    assert set(criterion8()) == {("B3", "no pair"), ("B3", "not P1"), ("D4", "no pair"), ("D4", "not P1")}


# -- 9. cohomology oracle --------------------------------------------------

def test_criterion_9_cohomology_oracle(capsys):
    corpus = [heisenberg(), abelian(3), abelian(4)]
    corpus += [make("L", n=n) for n in range(3, 6)] + [make("Q", m=3)]
    corpus += [random_nilpotent(seed, 3 + seed % 4) for seed in range(50)]
    corpus = [g for g in corpus if g.dim <= 6]
    fails = [(g.name, h2_dim(g), h2_dim_bruteforce(g)) for g in corpus if h2_dim(g) != h2_dim_bruteforce(g)]
    _report(capsys, 9, fails, f"{len(corpus)} algebras of dim <= 6")
    assert fails == []


# -- 10. repair ledger -----------------------------------------------------

def test_criterion_10_repair_ledger(capsys, monkeypatch):
    fails = [str(mid) for mid in catalog_ids(M_RANGE) if undocumented_repairs(mid)]
    # the check must also fire: a silently altered constructor is reported
    fam = FAMILIES["g2"]

    def altered(m, t):
        idx, f = fam.adopted(m=m, t=t)
        f = dict(f)
        top = max(f)
        f[top] = [(i, j, 2 * a) for i, j, a in f[top]]
        return idx, f

    monkeypatch.setitem(FAMILIES, "g2", type(fam)(**{**fam.__dict__, "adopted": altered}))
    if not undocumented_repairs("g2:m=5,t=2"):
        fails.append("altered g2 constructor not detected")
    _report(capsys, 10, fails, "every catalog model m = 4..8, plus fault injection")
    assert fails == []
