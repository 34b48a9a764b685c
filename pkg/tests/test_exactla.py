from fractions import Fraction

import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from nilgrad import kernel
from nilgrad.exactla import Matrix, Subspace, nullspace_basis, rank, rref, solve
from conftest import rational_matrices


def _sym(rows):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in rows])


def test_rref_small_known():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    r = rref(m)
    assert [list(row) for row in r.entries if any(row)] == [[1, 0, 1], [0, 1, 1]]
    assert rank(m) == 2


@settings(max_examples=60, deadline=None)
@given(rational_matrices())
def test_rref_matches_sympy(rows):
    ours = [list(r) for r in rref(Matrix.from_rows(rows)).entries if any(r)]
    ref, _ = _sym(rows).rref()
    theirs = [[Fraction(int(x.p), int(x.q)) for x in ref.row(i)] for i in range(ref.rows) if any(ref.row(i))]
    assert ours == theirs


@settings(max_examples=60, deadline=None)
@given(rational_matrices())
def test_rank_nullity(rows):
    n = len(rows[0])
    ker = nullspace_basis(rows, n)
    assert rank(rows, n) + len(ker) == n
    for v in ker:
        assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


@settings(max_examples=40, deadline=None)
@given(rational_matrices(), st.data())
def test_solve_consistent_systems(rows, data):
    n = len(rows[0])
    x = data.draw(st.lists(st.fractions(-3, 3, max_denominator=3), min_size=n, max_size=n))
    rhs = [sum(a * b for a, b in zip(r, x)) for r in rows]
    y = solve(rows, rhs, n)
    assert y is not None
    assert [sum(a * b for a, b in zip(r, y)) for r in rows] == rhs


def test_solve_inconsistent():
    assert solve([[1, 1], [1, 1]], [1, 2], 2) is None


def test_subspace_operations():
    a = Subspace.span([(1, 0, 0), (0, 1, 0)], 3)
    b = Subspace.span([(0, 1, 0), (0, 0, 1)], 3)
    assert a.intersect(b).dim == 1
    assert (a + b).dim == 3
    assert a.contains((2, -5, 0)) and not a.contains((0, 0, 1))
    assert len(Subspace.full(3).complement_basis(a)) == 1
    assert a.reduce((1, 1, 0)) == (0, 0, 0)


@settings(max_examples=40, deadline=None)
@given(rational_matrices(max_rows=6, max_cols=6))
def test_backends_agree(rows):
    if "cython" not in kernel.available_backends():
        return
    n = len(rows[0])
    out = {}
    for name in ("cython", "python"):
        prev = kernel.set_backend(name)
        try:
            out[name] = ([list(r) for r in rref(Matrix.from_rows(rows)).entries], nullspace_basis(rows, n))
        finally:
            kernel.set_backend(prev)
    assert out["cython"] == out["python"]


def test_int64_overflow_falls_back(backend):
    big = 2 ** 62
    rows = [[big, 3, 1], [5, big, 7], [11, 13, big]]
    assert rank(rows, 3) == 3
    assert nullspace_basis(rows, 3) == []


def test_set_backend_rejects_unknown():
    import pytest
    with pytest.raises(ValueError):
        kernel.set_backend("fortran")
