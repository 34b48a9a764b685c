"""Exact rational linear algebra: matrices, row reduction, kernels, subspaces.

Scalars are :class:`fractions.Fraction`.  Row reduction is delegated to the
integer kernel in :mod:`nilgrad.kernel` after clearing denominators row by
row, which leaves the row space unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from . import kernel

Rational = Fraction
Vector = tuple  # tuple of Fraction


class AmbientMismatch(ValueError):
    """Two subspaces (or a vector and a subspace) live in different spaces."""


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def vec(xs: Iterable) -> Vector:
    return tuple(as_fraction(x) for x in xs)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def is_zero(v: Sequence) -> bool:
    return not any(v)


def integer_row(row: Sequence) -> list[int]:
    """Scale a rational row to integers (same span)."""
    den = 1
    for x in row:
        if isinstance(x, Fraction) and x.denominator != 1:
            den = lcm(den, x.denominator)
    if den == 1:
        return [int(x) for x in row]
    return [int(x * den) for x in row]


@dataclass(frozen=True)
class Matrix:
    """Immutable rational matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match rows x cols")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        grid = tuple(vec(r) for r in rows)
        if cols is None:
            if not grid:
                raise ValueError("column count required for an empty matrix")
            cols = len(grid[0])
        return cls(len(grid), cols, grid)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple(zero_vector(cols) for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                      tuple(() for _ in range(self.cols)))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("vector length does not match matrix columns")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in self.entries)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        cols = other.transpose().entries
        return Matrix(self.rows, other.cols, tuple(
            tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols)
            for r in self.entries))


def _echelon_rational(rows: Sequence[Sequence], ncols: int, reduced: bool = True):
    int_rows, pivots = kernel.echelon([integer_row(r) for r in rows], ncols, reduced)
    out = []
    for r, p in zip(int_rows, pivots):
        piv = r[p]
        out.append(tuple(Fraction(x, piv) for x in r) if reduced else tuple(Fraction(x) for x in r))
    return out, pivots


def rref(m: Matrix) -> Matrix:
    """Unique reduced row echelon form, zero rows kept at the bottom."""
    rows, _ = _echelon_rational(m.entries, m.cols)
    rows += [zero_vector(m.cols)] * (m.rows - len(rows))
    return Matrix(m.rows, m.cols, tuple(rows))


def rank(m: Matrix | Sequence[Sequence], ncols: int | None = None) -> int:
    if isinstance(m, Matrix):
        return kernel.rank([integer_row(r) for r in m.entries], m.cols)
    rows = list(m)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return kernel.rank([integer_row(r) for r in rows], ncols)


def nullspace_basis(rows: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : r.x = 0 for every row r}, one vector per free column."""
    red, pivots = _echelon_rational(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in zip(red, pivots):
            if r[f]:
                v[p] = -r[f]
        basis.append(tuple(v))
    return basis


def kernel_of(m: Matrix) -> "Subspace":
    """Null space of ``m`` as a canonical subspace of Q^cols."""
    return Subspace.span(nullspace_basis(m.entries, m.cols), m.cols)


def solve(rows: Sequence[Sequence], rhs: Sequence, ncols: int) -> Vector | None:
    """One solution of ``A x = b`` (free variables zero), or None when inconsistent."""
    aug = [tuple(r) + (as_fraction(b),) for r, b in zip(rows, rhs)]
    red, pivots = _echelon_rational(aug, ncols + 1)
    if pivots and pivots[-1] == ncols:
        return None
    x = [Fraction(0)] * ncols
    for r, p in zip(red, pivots):
        x[p] = r[ncols]
    return tuple(x)


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n held as its reduced row echelon basis (canonical)."""

    ambient_dim: int
    basis: tuple
    pivots: tuple

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> "Subspace":
        vs = [vec(v) for v in vectors]
        for v in vs:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in Q^{ambient_dim}")
        rows, pivots = _echelon_rational(vs, ambient_dim)
        return cls(ambient_dim, tuple(rows), tuple(pivots))

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, (), ())

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, tuple(unit_vector(n, i) for i in range(n)), tuple(range(n)))

    @classmethod
    def coordinate(cls, n: int, indices: Iterable[int]) -> "Subspace":
        return cls.span((unit_vector(n, i) for i in indices), n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return len(self.basis)

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"Q^{self.ambient_dim} vs Q^{other.ambient_dim}")

    def contains(self, v: Sequence) -> bool:
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"vector of length {len(v)} in Q^{self.ambient_dim}")
        w = list(vec(v))
        for row, p in zip(self.basis, self.pivots):
            a = w[p]
            if a:
                w = [x - a * y for x, y in zip(w, row)]
        return not any(w)

    def reduce(self, v: Sequence) -> Vector:
        """Normal form of ``v`` modulo this subspace (pivot coordinates cleared)."""
        w = list(vec(v))
        for row, p in zip(self.basis, self.pivots):
            a = w[p]
            if a:
                w = [x - a * y for x, y in zip(w, row)]
        return tuple(w)

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        # x = sum a_i u_i = sum b_j w_j  <=>  [U; -W]^T (a, b) = 0
        cols = [list(u) for u in self.basis] + [[-x for x in w] for w in other.basis]
        rows = list(zip(*cols))
        sols = nullspace_basis(rows, len(cols))
        k = len(self.basis)
        out = []
        for s in sols:
            x = [Fraction(0)] * self.ambient_dim
            for a, u in zip(s[:k], self.basis):
                if a:
                    x = [xi + a * ui for xi, ui in zip(x, u)]
            out.append(x)
        return Subspace.span(out, self.ambient_dim)

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(b) for b in self.basis)

    def quotient_dim(self, sub: "Subspace") -> int:
        """dim(self / sub); ``sub`` must lie inside ``self``."""
        self._check(sub)
        if not sub.is_subspace_of(self):
            raise ValueError("quotient_dim: second subspace is not contained in the first")
        return self.dim - sub.dim

    def complement_basis(self, sub: "Subspace") -> list[Vector]:
        """Earliest rref rows of ``self`` that extend ``sub`` to all of ``self``."""
        chosen = []
        acc = sub
        for row in self.basis:
            if not acc.contains(row):
                acc = acc + Subspace.span([row], self.ambient_dim)
                chosen.append(row)
        return chosen

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def contains(a: Subspace, v: Sequence) -> bool:
    return a.contains(v)


def is_subspace(a: Subspace, b: Subspace) -> bool:
    """True when ``a`` is contained in ``b``."""
    return a.is_subspace_of(b)


def quotient_dim(a: Subspace, b: Subspace) -> int:
    return a.quotient_dim(b)
