"""Gradings, the associated graded algebra gr(g) and natural-gradedness certificates.

gr(g) is built on a basis adapted to the lower central series: in each layer
C^{k-1} g / C^k g we keep the earliest rref rows of C^{k-1} g that are not in
C^k g, give them degree k, and keep only the degree i+j part of each bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .cohomology import h2_dim
from .exactla import Subspace, solve, unit_vector
from .liecore import (LieAlgebra, _require_nilpotent, bracket, characteristic_sequence, derivation_dim)


@dataclass(frozen=True)
class Grading:
    """Degree of every basis vector; ``blocks[d]`` is the span of degree-d vectors."""

    degrees: tuple

    @property
    def blocks(self) -> dict:
        n = len(self.degrees)
        out: dict = {}
        for i, d in enumerate(self.degrees):
            out.setdefault(d, []).append(i)
        return {d: Subspace.coordinate(n, idx) for d, idx in sorted(out.items())}

    def block_indices(self, d: int) -> list[int]:
        return [i for i, e in enumerate(self.degrees) if e == d]


@dataclass(frozen=True)
class Depth:
    value: Fraction

    @property
    def is_integral(self) -> bool:
        return self.value.denominator == 1

    def __str__(self) -> str:
        return str(self.value)


def grading_of(g: LieAlgebra) -> Grading:
    if g.degrees is None:
        raise ValueError("algebra carries no degrees")
    return Grading(g.degrees)


def is_graded_law(g: LieAlgebra, gr: Grading | Sequence[int]) -> bool:
    """Every structure constant C^k_ij vanishes unless deg k = deg i + deg j."""
    deg = gr.degrees if isinstance(gr, Grading) else tuple(gr)
    if len(deg) != g.dim:
        raise ValueError(f"grading covers {len(deg)} basis vectors, algebra has {g.dim}")
    return all(deg[k] == deg[i] + deg[j] for i, j, k, _ in g.structure_constants())


def graded_violations(g: LieAlgebra, gr: Grading | Sequence[int]) -> list:
    deg = gr.degrees if isinstance(gr, Grading) else tuple(gr)
    return [(i, j, k, c) for i, j, k, c in g.structure_constants() if deg[k] != deg[i] + deg[j]]


def adapted_basis(g: LieAlgebra) -> tuple[list, list]:
    """(vectors, degrees) adapted to the lower central series."""
    prof = _require_nilpotent(g)
    terms = prof.terms
    vectors, degrees = [], []
    for k in range(1, len(terms)):
        for v in terms[k - 1].complement_basis(terms[k]):
            vectors.append(v)
            degrees.append(k)
    return vectors, degrees


def filtration_degrees(g: LieAlgebra) -> tuple | None:
    """Layer index of each basis vector when every C^k g is a coordinate subspace, else None."""
    prof = _require_nilpotent(g)
    n = g.dim
    deg = [0] * n
    for k, term in enumerate(prof.terms[:-1]):
        coords = [i for i in range(n) if term.contains(unit_vector(n, i))]
        if len(coords) != term.dim:
            return None
        for i in coords:
            deg[i] = k + 1
    return tuple(deg)


def associated_graded(g: LieAlgebra) -> tuple[LieAlgebra, Grading]:
    vectors, degrees = adapted_basis(g)
    n = g.dim
    # columns of the change of basis: coordinates of v in the adapted basis solve P c = v
    prows = [[vectors[a][i] for a in range(n)] for i in range(n)]
    labels = []
    for v in vectors:
        nz = [i for i, x in enumerate(v) if x]
        labels.append(g.labels[nz[0]] if len(nz) == 1 and v[nz[0]] == 1 else None)
    if len(set(l for l in labels if l)) != len([l for l in labels if l]) or None in labels:
        labels = [f"Y{a + 1}" for a in range(n)]
    table: dict = {}
    for a in range(n):
        for b in range(a + 1, n):
            z = bracket(g, vectors[a], vectors[b])
            if not any(z):
                continue
            coords = solve(prows, z, n)
            target = degrees[a] + degrees[b]
            row = {k: c for k, c in enumerate(coords) if c and degrees[k] == target}
            if row:
                table[(a, b)] = row
    gr = Grading(tuple(degrees))
    return LieAlgebra(n, table, labels, degrees, f"gr({g.name})" if g.name else None), gr


@dataclass(frozen=True)
class GradedVerdict:
    graded_in_given_basis: bool
    natural_degrees: Grading
    invariants_match: bool
    verdict: str                    # "naturally graded", "not naturally graded", "inconclusive"
    invariants: dict


def _invariants(g: LieAlgebra, seed: int) -> tuple:
    prof = _require_nilpotent(g)
    cs = characteristic_sequence(g, seed=seed).blocks if not g.is_abelian() else (1,) * g.dim
    return prof.type_sequence, cs, h2_dim(g), derivation_dim(g)


def natural_graded_verdict(g: LieAlgebra, seed: int = 0, compare: bool = False) -> GradedVerdict:
    """Certificate-based decision whether g is isomorphic to gr(g).

    A homogeneous law in a filtration-adapted basis settles it directly; the
    invariants of g and gr(g) (type, characteristic sequence, dim H^2,
    dim Der) are compared otherwise, or always with ``compare=True``.
    """
    fdeg = filtration_degrees(g)
    if fdeg is not None:
        natural = Grading(fdeg)
        in_basis = is_graded_law(g, natural)
    else:
        natural = Grading(tuple(adapted_basis(g)[1]))
        in_basis = False
    inv: dict = {}
    match = True
    if compare or not in_basis:
        gr_alg, _ = associated_graded(g)
        mine = _invariants(g, seed)
        theirs = _invariants(gr_alg, seed)
        match = mine == theirs
        inv = {"type": (mine[0], theirs[0]), "charseq": (mine[1], theirs[1]), "h2_dim": (mine[2], theirs[2]),
               "derivation_dim": (mine[3], theirs[3])}
    if in_basis:
        verdict = "naturally graded"
    elif not match:
        verdict = "not naturally graded"
    else:
        verdict = "inconclusive"
    return GradedVerdict(in_basis, natural, match, verdict, inv)


def depth(gr: Grading | LieAlgebra, x) -> Depth:
    """(degree - 1)/2 of a homogeneous vector (basis index or coordinate vector)."""
    deg = gr.degrees if isinstance(gr, Grading) else grading_of(gr).degrees
    if isinstance(x, int):
        return Depth(Fraction(deg[x] - 1, 2))
    support = {deg[i] for i, c in enumerate(x) if c}
    if len(support) != 1:
        raise ValueError("vector is not homogeneous for this grading")
    return Depth(Fraction(support.pop() - 1, 2))
