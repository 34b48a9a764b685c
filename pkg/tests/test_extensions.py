from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings

from nilgrad.cohomology import TwoCochain, coboundary_space, cocycle_space
from nilgrad.extensions import (ExtensionClass, ExtensionError, ExtensionSpec, central_extend, cochain_of_last,
                                enumerate_graded_extensions, extension_tower, filiform_chain, fingerprint,
                                graded_derivations, reduce_by_equivalence, same_fingerprint)
from nilgrad.liecore import (abelian, centralizer_property, characteristic_sequence, heisenberg, lower_central_series,
                             quotient_by_last)
from nilgrad.models import make
from conftest import nilpotent_laws


def _spec(**kw):
    return ExtensionSpec(**kw)


def test_heisenberg_extension():
    h = central_extend(abelian(2).with_degrees(None), TwoCochain.unit(2, 0, 1))
    assert h == heisenberg()


def test_split_extension():
    g = make("Q:m=3")
    e = central_extend(g, TwoCochain(g.dim))
    assert e.dim == g.dim + 1 and quotient_by_last(e) == g
    assert not any(e.basis_bracket(i, g.dim) for i in range(g.dim))


def test_non_cocycle_rejected():
    g = make("L:n=3")
    with pytest.raises(ExtensionError, match="not a cocycle"):
        central_extend(g, TwoCochain.unit(4, 1, 3))


def test_g4_from_Q():
    m = 4
    g = make("Q", m=m)
    c = TwoCochain(g.dim, {(j - 1, 2 * m - j): (-1) ** j for j in range(2, m + 1)})
    assert same_fingerprint(central_extend(g, c), make("g4", m=m))


@settings(max_examples=15, deadline=None)
@given(nilpotent_laws(3, 5))
def test_extension_invariants(g):
    z = cocycle_space(g)
    c = TwoCochain.from_vector(g.dim, [sum(b[t] for b in z.basis) for t in range(z.ambient_dim)])
    e = central_extend(g, c)
    assert quotient_by_last(e) == g
    assert cochain_of_last(e) == c
    assert all(not e.basis_bracket(i, g.dim) for i in range(g.dim))
    assert lower_central_series(e).nilindex - lower_central_series(g).nilindex in (0, 1)


def _classes(g, **kw):
    return enumerate_graded_extensions(g, None, _spec(**kw))


@pytest.mark.parametrize("m", [4, 5])
def test_Q_family_t_k2_unique(m):
    for t in range(1, m - 1):
        cls = _classes(make("Q", m=m), family=(t, (2,)), target_nilindex=2 * m - 1)
        assert len(cls) == 1
        assert same_fingerprint(cls[0].extended, make("g2", m=m, t=t))


def test_Q_half_depth_empty():
    assert _classes(make("Q:m=4"), family=(Fraction(3, 2), (2,)), target_nilindex=7) == []


def test_L7_gives_g4():
    cls = _classes(make("L:n=7"), family=(3, (2,)), target_nilindex=7)
    assert len(cls) == 1 and same_fingerprint(cls[0].extended, make("g4:m=4"))


def test_s4_degree7():
    # two (P2) classes; a third graded class is (7,1,1) but not (P2)
    g = make("s:m=4")
    both = _classes(g, target_degree=7, target_nilindex=7, required_charseq=(7, 1, 1))
    p2 = _classes(g, target_degree=7, target_nilindex=7, required_charseq=(7, 1, 1), require_P2=True)
    assert len(both) == 3 and len(p2) == 2
    fps = {fingerprint(c.extended) for c in p2}
    assert fps == {fingerprint(make("g_42_1")), fingerprint(make("g3:m=4"))}


@pytest.mark.parametrize("m", [4, 5])
def test_Q_branch_count_and_stability(m):
    # over Q the (2m-1,1,1) (P2) extensions are g2 for each t and g4; degrees past the top add nothing
    g = make("Q", m=m)
    found = []
    for d in range(2, 2 * m + 3):
        found += _classes(g, target_degree=d, target_nilindex=2 * m - 1,
                          required_charseq=(2 * m - 1, 1, 1), require_P2=True)
    want = [make("g2", m=m, t=t) for t in range(1, m - 1)] + [make("g4", m=m)]
    assert Counter(fingerprint(c.extended) for c in found) == Counter(fingerprint(w) for w in want)


def test_degenerate_spec_is_empty():
    # no pair of degrees sums to 1
    assert _classes(make("Q:m=4"), target_degree=1) == []
    with pytest.raises(ValueError, match="inconsistent"):
        _spec(family=(2, (2,)), target_degree=6).resolved_degree()


def test_reduce_coboundary_and_scale():
    g = make("Q:m=4")
    cls = _classes(g, family=(2, (2,)), target_nilindex=7)[0]
    c = cls.cochain
    # d(X6^*)(x, y) = -X6^*([x, y]) has degree 5, the degree of c
    db = TwoCochain(g.dim, {(i, j): -a for i, j, k, a in g.structure_constants() if k == 5})
    assert db and g.degrees[5] == 5
    shifted = c + db
    cands = [cls,
             ExtensionClass(g, shifted, central_extend(g, shifted, degree=5)),
             ExtensionClass(g, 5 * c, central_extend(g, 5 * c, degree=5))]
    assert len(reduce_by_equivalence(cands)) == 1


def test_graded_derivations_are_derivations():
    g = make("s:m=4")
    for D in graded_derivations(g):
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs = [Fraction(0)] * g.dim
                for k, c in g.basis_bracket(i, j).items():
                    for r in range(g.dim):
                        lhs[r] += c * D[r][k]
                rhs = [Fraction(0)] * g.dim
                for k in range(g.dim):
                    for r, c in g.basis_bracket(k, j).items():
                        rhs[r] += D[k][i] * c
                    for r, c in g.basis_bracket(i, k).items():
                        rhs[r] += D[k][j] * c
                assert lhs == rhs


def test_towers():
    tower = extension_tower("g21q", 3, m=4, t=1)
    assert [characteristic_sequence(a).blocks for a in tower] == [(7, 2, 1), (7, 3, 1), (7, 4, 1), (7, 5, 1)]
    assert extension_tower("g21q", 0, m=4, t=1)[0] == make("g21:m=4,t=1")
    g1 = extension_tower("g_m0_1kq", 1, m=4, k=0)[-1]
    assert g1.dim == 11 and lower_central_series(g1).type_sequence[:3] == (3, 2, 2)
    with pytest.raises(Exception):
        extension_tower("g21q", 4, m=4, t=1)


def test_filiform_chain():
    chain = filiform_chain(8)
    assert {n: len(v) for n, v in chain.items()} == {4: 1, 5: 1, 6: 2, 7: 1, 8: 2}
    six = chain[6]
    p2 = [a for a in six if centralizer_property(a).variant == "P2"]
    assert len(p2) == 1 and same_fingerprint(p2[0], make("Q:m=3"))
