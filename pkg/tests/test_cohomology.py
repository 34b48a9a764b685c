from fractions import Fraction
from itertools import combinations

import pytest
import sympy
from hypothesis import given, settings

from nilgrad.cohomology import (TwoCochain, coboundary_space, cocycle_space, graded_cocycle_indices, h2, h2_dim,
                                h2_dim_bruteforce, is_coboundary, is_cocycle, ker_lambda, omega_subspace)
from nilgrad.liecore import abelian, heisenberg
from nilgrad.models import make
from conftest import nilpotent_laws


def _sympy_h2(g):
    """Third route: the cocycle condition written symbolically and solved by sympy."""
    n = g.dim
    phi = {p: sympy.Symbol(f"p{p[0]}_{p[1]}") for p in combinations(range(n), 2)}

    def ev(v, z):
        s = 0
        for k, c in v.items():
            if k != z:
                s += sympy.Rational(c.numerator, c.denominator) * (phi[(k, z)] if k < z else -phi[(z, k)])
        return s

    eqs = []
    for x, y, z in combinations(range(n), 3):
        e = ev(g.basis_bracket(x, y), z) - ev(g.basis_bracket(x, z), y) + ev(g.basis_bracket(y, z), x)
        if e != 0:
            eqs.append(e)
    if eqs:
        A, _ = sympy.linear_eq_to_matrix(eqs, list(phi.values()))
        z2 = len(phi) - A.rank()
    else:
        z2 = len(phi)
    d1 = sympy.Matrix([[g.basis_bracket(i, j).get(k, 0) for k in range(n)] for i, j in phi])
    return z2 - d1.rank()


def test_heisenberg_h2():
    assert h2_dim(heisenberg()) == 2
    assert h2_dim(abelian(3)) == 3
    assert h2_dim(abelian(4)) == 6


@pytest.mark.parametrize("mid", ["L:n=3", "L:n=4", "Q:m=3", "s:m=4"])
def test_three_routes_agree(mid):
    g = make(mid)
    assert h2_dim(g) == h2_dim_bruteforce(g) == _sympy_h2(g)


@settings(max_examples=25, deadline=None)
@given(nilpotent_laws(3, 6))
def test_h2_matches_bruteforce(g):
    assert h2_dim(g) == h2_dim_bruteforce(g)


@settings(max_examples=20, deadline=None)
@given(nilpotent_laws(3, 6))
def test_homology_dimensions(g):
    # dim H_2 = dim Ker(lambda) - dim Omega = dim Z^2 - dim B^2
    assert omega_subspace(g).dim <= ker_lambda(g).dim
    assert ker_lambda(g).dim - omega_subspace(g).dim == cocycle_space(g).dim - coboundary_space(g).dim


@settings(max_examples=20, deadline=None)
@given(nilpotent_laws(3, 6))
def test_coboundaries_are_cocycles(g):
    for v in coboundary_space(g).basis:
        c = TwoCochain.from_vector(g.dim, v)
        assert is_cocycle(g, c) and is_coboundary(g, c)


def test_representatives_span_complement():
    g = make("Q:m=3")
    H = h2(g)
    assert len(H.representative_cochains) == H.h2_dim == h2_dim(g)
    assert len(H.homology_basis) == H.h2_dim
    for c in H.representative_cochains:
        assert is_cocycle(g, c) and not is_coboundary(g, c)


def test_cochain_arithmetic():
    a = TwoCochain.unit(4, 0, 1)
    b = TwoCochain(4, {(2, 1): 3})
    assert (a + b).value(1, 2) == -3
    assert (2 * a - a) == a
    assert TwoCochain.from_vector(4, (a + b).vector()) == a + b
    assert a((1, 0, 0, 0), (0, 1, 0, 0)) == 1 and a((0, 1, 0, 0), (1, 0, 0, 0)) == -1
    with pytest.raises(IndexError):
        TwoCochain(3, {(0, 5): 1})


def test_graded_indices():
    # i + j = 2t + 1 + k
    assert graded_cocycle_indices(8, 2, 2) == [(1, 6), (2, 5), (3, 4)]
    assert graded_cocycle_indices(10, 2, 3, half=True) == [(1, 5), (2, 4)]
    with pytest.raises(ValueError):
        graded_cocycle_indices(8, 1, 2)
    with pytest.raises(ValueError):
        graded_cocycle_indices(8, 2, 2, half=True)
