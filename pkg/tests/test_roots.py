import pytest

from nilgrad.liecore import centralizer_property, jacobi_violations, lower_central_series
from nilgrad.roots import (RootSystemError, borel_nilradical_P_check, build, delta_minus, expected_sum_index,
                           format_root, height, matrix_nilradical, middle_pairs, pair_with_sum, parse_type,
                           proposition1_pair, written_pair, add)

ALL = ([("A", l) for l in range(1, 9)] + [("B", l) for l in range(2, 9)] + [("C", l) for l in range(3, 9)]
       + [("D", l) for l in range(4, 9)] + [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)])

COUNTS = {"A": lambda l: l * (l + 1) // 2, "B": lambda l: l * l, "C": lambda l: l * l, "D": lambda l: l * (l - 1)}
EXCEPTIONAL = {("E", 6): (36, 11), ("E", 7): (63, 17), ("E", 8): (120, 29), ("F", 4): (24, 11), ("G", 2): (6, 5)}


@pytest.mark.parametrize("t,l", ALL)
def test_counts_and_strata(t, l):
    rs = build(t, l)
    if (t, l) in EXCEPTIONAL:
        n, h = EXCEPTIONAL[(t, l)]
        assert len(rs.positive_roots) == n and height(rs.highest_root) == h
    else:
        assert len(rs.positive_roots) == COUNTS[t](l)
    strata = rs.strata()
    assert sum(len(s.roots) for s in strata) == len(rs.positive_roots)
    assert set(strata[0].roots) == set(rs.simple_roots)
    assert all(s.roots for s in strata)
    # closure: a sum of two positive roots that is a root is listed
    assert all(rs.is_root(a) for a in rs.positive_roots)


def test_small_cases():
    assert set(build("A", 2).positive_roots) == {(1, 0), (0, 1), (1, 1)}
    g2 = build("G", 2)
    assert g2.highest_root == (3, 2) and height(g2.highest_root) == 5
    assert parse_type("e8").name == "E8"
    assert format_root((1, 0, 2)) == "a1 + 2a3"
    for bad in ("C2", "D3", "E9", "G3", "X4"):
        with pytest.raises((RootSystemError, ValueError)):
            parse_type(bad)


def test_A4_pair():
    assert proposition1_pair(build("A", 4)) == ((1, 1, 0, 0), (0, 0, 1, 1))


def test_F4_pair():
    rs = build("F", 4)
    a, b = written_pair(rs)
    assert (a, b) == ((1, 2, 2, 0), (0, 1, 2, 2))
    assert add(a, b) == delta_minus(rs, 1) and (a, b) in middle_pairs(rs)


def test_G2_has_no_pair():
    rs = build("G", 2)
    assert rs.stratum(2) == ((1, 1),)
    assert proposition1_pair(rs) is None
    rep = borel_nilradical_P_check(rs)
    assert not rep.is_P1 and rep.variant == "P2"


# Types where the middle-height argument fails: no pair at all in these cases.
NO_PAIR = {("B", 3), ("D", 4), ("G", 2)}


@pytest.mark.parametrize("t,l", [x for x in ALL if x[0] != "A" or x[1] >= 2])
def test_sum_identities(t, l):
    rs = build(t, l)
    if (t, l) in NO_PAIR:
        assert proposition1_pair(rs) is None
        return
    assert proposition1_pair(rs) is not None
    s = expected_sum_index(rs)
    target = delta_minus(rs, s)
    assert pair_with_sum(rs, target) is not None
    if t == "A" and l % 2 == 0:
        assert height(target) == height(rs.highest_root)
    else:
        assert height(target) == height(rs.highest_root) - 1


@pytest.mark.parametrize("t,l", [("A", 3), ("A", 6), ("B", 4), ("B", 6), ("E", 6), ("E", 7), ("E", 8), ("F", 4)])
def test_written_pairs(t, l):
    rs = build(t, l)
    a, b = written_pair(rs)
    assert height(a) == height(b) == height(rs.highest_root) // 2
    assert add(a, b) == delta_minus(rs, expected_sum_index(rs))


def test_B3_written_pair_is_not_a_root():
    rs = build("B", 3)
    a, _ = written_pair(rs)
    assert a == (0, 0, 2) and not rs.is_root(a)


@pytest.mark.parametrize("t,l", [("A", 3), ("C", 4), ("E", 6), ("B", 5)])
def test_P1_types(t, l):
    rep = borel_nilradical_P_check(build(t, l))
    assert rep.holds_P and rep.variant == "P1"


@pytest.mark.parametrize("t,l", [("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("C", 3), ("C", 4),
                                 ("D", 4), ("D", 5)])
def test_matrix_route_agrees(t, l):
    rs = build(t, l)
    n = matrix_nilradical(t, l)
    assert n.dim == len(rs.positive_roots)
    assert not jacobi_violations(n)
    assert lower_central_series(n).nilindex == height(rs.highest_root)
    rep = centralizer_property(n)
    shadow = borel_nilradical_P_check(rs)
    assert (rep.holds_P, rep.variant) == (shadow.holds_P, shadow.variant)
