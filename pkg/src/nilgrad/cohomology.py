"""Degree-two Chevalley-Eilenberg cohomology with trivial coefficients.

Bivectors and 2-cochains are coordinate vectors over the basis
``X_i ^ X_j`` (i < j) in lexicographic order.  The homology side follows the
construction ``H_2 = Ker(lambda) / Omega``; cocycles are the functionals
vanishing on ``Omega`` and coboundaries those of the form ``f o mu``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exactla import Matrix, Subspace, as_fraction, nullspace_basis, rank
from .liecore import LieAlgebra


def pair_index(n: int) -> dict:
    """(i, j) -> position of X_i ^ X_j, 0-based, i < j, lexicographic."""
    return {p: a for a, p in enumerate(combinations(range(n), 2))}


def pairs(n: int) -> list:
    return list(combinations(range(n), 2))


class TwoCochain:
    """Alternating bilinear form, stored as ``{(i, j): a_ij}`` with i < j (0-based)."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs: Mapping | Iterable = ()):
        self.dim = dim
        acc: dict = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for (i, j), a in items:
            a = as_fraction(a)
            if i == j:
                if a:
                    raise ValueError("alternating cochain has zero diagonal")
                continue
            if i > j:
                i, j, a = j, i, -a
            if not (0 <= i < j < dim):
                raise IndexError(f"pair ({i}, {j}) outside dimension {dim}")
            acc[(i, j)] = acc.get((i, j), Fraction(0)) + a
        self.coeffs = {p: a for p, a in sorted(acc.items()) if a}

    @classmethod
    def unit(cls, dim: int, i: int, j: int) -> "TwoCochain":
        """phi_ij: 1 on X_i ^ X_j, 0 elsewhere."""
        return cls(dim, {(i, j): 1})

    @classmethod
    def from_vector(cls, dim: int, v: Sequence) -> "TwoCochain":
        return cls(dim, {p: a for p, a in zip(pairs(dim), v) if a})

    def vector(self) -> tuple:
        idx = pair_index(self.dim)
        v = [Fraction(0)] * len(idx)
        for p, a in self.coeffs.items():
            v[idx[p]] = a
        return tuple(v)

    def __call__(self, x: Sequence, y: Sequence) -> Fraction:
        s = Fraction(0)
        for (i, j), a in self.coeffs.items():
            s += a * (as_fraction(x[i]) * as_fraction(y[j]) - as_fraction(x[j]) * as_fraction(y[i]))
        return s

    def value(self, i: int, j: int) -> Fraction:
        if i == j:
            return Fraction(0)
        if i < j:
            return self.coeffs.get((i, j), Fraction(0))
        return -self.coeffs.get((j, i), Fraction(0))

    def support(self) -> list:
        return list(self.coeffs)

    def __add__(self, other: "TwoCochain") -> "TwoCochain":
        acc = dict(self.coeffs)
        for p, a in other.coeffs.items():
            acc[p] = acc.get(p, Fraction(0)) + a
        return TwoCochain(self.dim, acc)

    def __mul__(self, s) -> "TwoCochain":
        s = as_fraction(s)
        return TwoCochain(self.dim, {p: a * s for p, a in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self) -> "TwoCochain":
        return self * -1

    def __sub__(self, other: "TwoCochain") -> "TwoCochain":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return isinstance(other, TwoCochain) and self.dim == other.dim and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self.coeffs.items())))

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __repr__(self) -> str:
        body = " + ".join(f"{a}*phi_{i + 1},{j + 1}" for (i, j), a in self.coeffs.items()) or "0"
        return f"TwoCochain({body})"


def lambda_map(g: LieAlgebra) -> Matrix:
    """Matrix of X_i ^ X_j -> [X_i, X_j] (rows: basis of g, columns: pairs)."""
    n = g.dim
    idx = pair_index(n)
    rows = [[Fraction(0)] * len(idx) for _ in range(n)]
    for i, j, k, c in g.structure_constants():
        rows[k][idx[(i, j)]] = c
    return Matrix(n, len(idx), tuple(tuple(r) for r in rows))


def _wedge_add(acc: dict, v: Mapping, z: int, coeff) -> None:
    # acc += coeff * (v ^ X_z)
    for k, c in v.items():
        if k == z:
            continue
        if k < z:
            acc[(k, z)] = acc.get((k, z), 0) + coeff * c
        else:
            acc[(z, k)] = acc.get((z, k), 0) - coeff * c


def omega_generator(g: LieAlgebra, x: int, y: int, z: int) -> dict:
    """mu(x,y)^z + mu(y,z)^x + mu(z,x)^y for basis vectors, as {(i, j): c}."""
    acc: dict = {}
    _wedge_add(acc, g.basis_bracket(x, y), z, 1)
    _wedge_add(acc, g.basis_bracket(y, z), x, 1)
    _wedge_add(acc, g.basis_bracket(z, x), y, 1)
    return {p: c for p, c in acc.items() if c}


def omega_generators(g: LieAlgebra) -> list:
    n = g.dim
    active = sorted({i for i, j, _, _ in g.structure_constants()} | {j for _, j, _, _ in g.structure_constants()})
    out = []
    for x, y, z in combinations(range(n), 3):
        # at least one of the three brackets must be nonzero
        if x not in active and y not in active:
            continue
        gen = omega_generator(g, x, y, z)
        if gen:
            out.append(gen)
    return out


def omega_subspace(g: LieAlgebra) -> Subspace:
    idx = pair_index(g.dim)
    vecs = []
    for gen in omega_generators(g):
        v = [Fraction(0)] * len(idx)
        for p, c in gen.items():
            v[idx[p]] = Fraction(c)
        vecs.append(v)
    return Subspace.span(vecs, len(idx))


def ker_lambda(g: LieAlgebra) -> Subspace:
    m = lambda_map(g)
    return Subspace.span(nullspace_basis(m.entries, m.cols), m.cols)


def coboundary_space(g: LieAlgebra) -> Subspace:
    """B^2: the functionals omega_k o mu, i.e. the row space of lambda."""
    m = lambda_map(g)
    return Subspace.span([r for r in m.entries if any(r)], m.cols)


def cocycle_space(g: LieAlgebra) -> Subspace:
    """Z^2: functionals on the bivectors vanishing on Omega."""
    om = omega_subspace(g)
    ncols = len(pair_index(g.dim))
    return Subspace.span(nullspace_basis(om.basis, ncols), ncols) if om.basis else Subspace.full(ncols)


@dataclass(frozen=True)
class CohomologySpace:
    ker_lambda: Subspace
    omega: Subspace
    h2_dim: int
    representative_cochains: tuple   # TwoCochains spanning a complement of B^2 in Z^2

    @property
    def homology_basis(self) -> list:
        """Bivectors completing Omega to Ker(lambda) (earliest rref rows)."""
        return self.ker_lambda.complement_basis(self.omega)


def h2(g: LieAlgebra, representatives: bool = True) -> CohomologySpace:
    kl = ker_lambda(g)
    om = omega_subspace(g)
    reps: tuple = ()
    if representatives:
        z2 = cocycle_space(g)
        b2 = coboundary_space(g)
        reps = tuple(TwoCochain.from_vector(g.dim, v) for v in z2.complement_basis(b2))
    return CohomologySpace(kl, om, kl.dim - om.dim, reps)


def h2_dim(g: LieAlgebra) -> int:
    return ker_lambda(g).dim - omega_subspace(g).dim


def is_cocycle(g: LieAlgebra, c: TwoCochain) -> bool:
    """c vanishes on every generator of Omega (equivalently, g + c is a Lie algebra)."""
    for gen in omega_generators(g):
        if sum((c.value(i, j) * v for (i, j), v in gen.items()), Fraction(0)):
            return False
    return True


def cocycle_zero_test(g: LieAlgebra, c: TwoCochain) -> bool:
    """True iff the bivector sum a^ij X_i ^ X_j lies in Omega."""
    return omega_subspace(g).contains(c.vector())


def is_coboundary(g: LieAlgebra, c: TwoCochain) -> bool:
    return coboundary_space(g).contains(c.vector())


def graded_cocycle_indices(n: int, k: int, t: int, half: bool = False) -> list:
    """Index pairs (1-based, i < j <= n) supporting H_k^{2,t} or H_k^{2,t/2}.

    Integer family: i + j = 2t + 1 + k.  Fractional family (t odd):
    i + j = t + 1 + k.  t must satisfy 1 <= t <= floor((n - 3) / 2).
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    top = (n - 3) // 2
    if not 1 <= t <= top:
        raise ValueError(f"t={t} outside 1 <= t <= {top}")
    if half and t % 2 == 0:
        raise ValueError("fractional family requires odd t")
    s = t + 1 + k if half else 2 * t + 1 + k
    return [(i, s - i) for i in range(1, n + 1) if i < s - i <= n]


# -- brute-force oracle ------------------------------------------------------
def ce_differential_1(g: LieAlgebra) -> list:
    """Rows of d: C^1 -> C^2, (df)(x, y) = -f([x, y]); columns indexed by g^*."""
    n = g.dim
    rows = []
    for i, j in combinations(range(n), 2):
        r = [Fraction(0)] * n
        for k, c in g.basis_bracket(i, j).items():
            r[k] -= c
        rows.append(r)
    return rows


def ce_differential_2(g: LieAlgebra) -> list:
    """Rows of d: C^2 -> C^3 from the Chevalley-Eilenberg formula.

    (d phi)(x, y, z) = -phi([x,y], z) + phi([x,z], y) - phi([y,z], x).
    """
    n = g.dim
    idx = pair_index(n)

    def put(row, v, w, sign):
        for k, c in v.items():
            if k == w:
                continue
            if k < w:
                row[idx[(k, w)]] += sign * c
            else:
                row[idx[(w, k)]] -= sign * c

    rows = []
    for x, y, z in combinations(range(n), 3):
        r = [Fraction(0)] * len(idx)
        put(r, g.basis_bracket(x, y), z, -1)
        put(r, g.basis_bracket(x, z), y, 1)
        put(r, g.basis_bracket(y, z), x, -1)
        if any(r):
            rows.append(r)
    return rows


def h2_dim_bruteforce(g: LieAlgebra) -> int:
    """dim Z^2 - dim B^2 from the full cochain complex (independent oracle)."""
    n = g.dim
    m = n * (n - 1) // 2
    d2 = ce_differential_2(g)
    z2 = m - (rank(d2, m) if d2 else 0)
    d1 = ce_differential_1(g)
    b2 = rank(d1, n) if d1 else 0
    return z2 - b2
