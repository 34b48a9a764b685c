"""Structure-constant Lie algebras and their invariants.

Indices are 0-based internally; labels default to ``X1 .. Xn``.  The bracket
table stores ``[X_i, X_j]`` for ``i < j`` only; the rest follows from
antisymmetry.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Iterable, Mapping, Sequence

from . import kernel
from .exactla import Subspace, as_fraction, integer_row, unit_vector, vec, zero_vector


class NotNilpotentError(ValueError):
    pass


class LieAlgebra:
    """Finite-dimensional algebra given by rational structure constants.

    ``brackets`` maps ``(i, j)`` with ``i < j`` (0-based) to a mapping
    ``k -> C^k_ij``.  Keys with ``i > j`` are accepted and folded in with the
    sign flipped.  Construction does not enforce Jacobi; use
    :func:`jacobi_violations` (or ``check=True``) for that.
    """

    __slots__ = ("dim", "labels", "degrees", "name", "_table", "_ad_cache")

    def __init__(self, dim: int, brackets: Mapping = (), labels: Sequence[str] | None = None,
                 degrees: Sequence[int] | None = None, name: str | None = None,
                 check: bool = False):
        self.dim = int(dim)
        self.labels = tuple(labels) if labels is not None else tuple(f"X{i + 1}" for i in range(self.dim))
        if len(self.labels) != self.dim:
            raise ValueError("label count does not match dimension")
        self.degrees = tuple(int(d) for d in degrees) if degrees is not None else None
        if self.degrees is not None and len(self.degrees) != self.dim:
            raise ValueError("degree count does not match dimension")
        self.name = name
        table: dict = {}
        items = brackets.items() if isinstance(brackets, Mapping) else brackets
        for (i, j), target in items:
            if i == j:
                if any(as_fraction(c) for c in _coeff_items(target, self.dim)[1]):
                    raise ValueError(f"[X{i + 1}, X{i + 1}] must vanish")
                continue
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            if not (0 <= i < self.dim and 0 <= j < self.dim):
                raise IndexError(f"bracket index out of range: ({i}, {j})")
            row = table.setdefault((i, j), {})
            for k, c in zip(*_coeff_items(target, self.dim)):
                c = as_fraction(c) * sign
                if not 0 <= k < self.dim:
                    raise IndexError(f"bracket target out of range: {k}")
                row[k] = row.get(k, Fraction(0)) + c
        self._table = {key: tuple(sorted((k, c) for k, c in row.items() if c))
                       for key, row in sorted(table.items())}
        self._table = {key: row for key, row in self._table.items() if row}
        self._ad_cache = {}
        if check:
            bad = jacobi_violations(self)
            if bad:
                i, j, k, _ = bad[0]
                raise ValueError(f"Jacobi identity fails on (X{i + 1}, X{j + 1}, X{k + 1})")

    # -- structure constants -------------------------------------------------
    def structure_constants(self):
        """Iterate ``(i, j, k, c)`` with ``i < j`` and ``c = C^k_ij != 0``."""
        for (i, j), row in self._table.items():
            for k, c in row:
                yield i, j, k, c

    def bracket_table(self) -> dict:
        return {key: dict(row) for key, row in self._table.items()}

    def basis_bracket(self, i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return dict(self._table.get((i, j), ()))
        return {k: -c for k, c in self._table.get((j, i), ())}

    def is_abelian(self) -> bool:
        return not self._table

    def with_degrees(self, degrees: Sequence[int] | None) -> "LieAlgebra":
        return LieAlgebra(self.dim, self.bracket_table(), self.labels, degrees, self.name)

    def renamed(self, name: str | None) -> "LieAlgebra":
        return LieAlgebra(self.dim, self.bracket_table(), self.labels, self.degrees, name)

    def __eq__(self, other) -> bool:
        return isinstance(other, LieAlgebra) and self.dim == other.dim and self._table == other._table

    def __hash__(self) -> int:
        return hash((self.dim, tuple(self._table.items())))

    def __repr__(self) -> str:
        tag = f" {self.name}" if self.name else ""
        return f"<LieAlgebra{tag} dim={self.dim} brackets={len(self._table)}>"

    # -- linear maps ---------------------------------------------------------
    def ad_matrix(self, x: Sequence) -> list[list[Fraction]]:
        """Matrix of ad(x): column j is [x, X_j]."""
        x = vec(x)
        if len(x) != self.dim:
            raise ValueError(f"vector of length {len(x)} in a {self.dim}-dim algebra")
        n = self.dim
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), row in self._table.items():
            xi, xj = x[i], x[j]
            if xi:
                for k, c in row:
                    m[k][j] += xi * c
            if xj:
                for k, c in row:
                    m[k][i] -= xj * c
        return m


def _coeff_items(target, n):
    if isinstance(target, Mapping):
        keys = list(target.keys())
        return keys, [target[k] for k in keys]
    t = list(target)
    if len(t) == n and not (t and isinstance(t[0], tuple)):
        idx = [k for k, c in enumerate(t) if c]
        return idx, [t[k] for k in idx]
    return [k for k, _ in t], [c for _, c in t]


# -- bracket and Jacobi ------------------------------------------------------
def bracket(g: LieAlgebra, x: Sequence, y: Sequence) -> tuple:
    """Bilinear alternating evaluation of the law on coordinate vectors."""
    if len(x) != g.dim or len(y) != g.dim:
        raise ValueError(f"vectors must have length {g.dim}")
    out = [Fraction(0)] * g.dim
    for (i, j), row in g._table.items():
        coef = as_fraction(x[i]) * as_fraction(y[j]) - as_fraction(x[j]) * as_fraction(y[i])
        if coef:
            for k, c in row:
                out[k] += coef * c
    return tuple(out)


def _sparse_bracket(g: LieAlgebra, x: dict, y: dict) -> dict:
    out: dict = {}
    for i, a in x.items():
        for j, b in y.items():
            if i == j:
                continue
            for k, c in g.basis_bracket(i, j).items():
                out[k] = out.get(k, 0) + a * b * c
    return {k: c for k, c in out.items() if c}


def jacobi_defect(g: LieAlgebra, i: int, j: int, k: int) -> dict:
    """[X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]] as a sparse vector."""
    out: dict = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        inner = g.basis_bracket(b, c)
        for t, v in _sparse_bracket(g, {a: 1}, inner).items():
            out[t] = out.get(t, 0) + v
    return {t: v for t, v in out.items() if v}


def jacobi_violations(g: LieAlgebra) -> list:
    """All basis triples ``(i, j, k)``, i<j<k, with their nonzero Jacobi defect."""
    bad = []
    n = g.dim
    # Only triples touching at least two bracket-active pairs can fail.
    active = sorted({i for i, j in g._table} | {j for i, j in g._table})
    for i, j, k in combinations(active, 3):
        d = jacobi_defect(g, i, j, k)
        if d:
            bad.append((i, j, k, tuple(d.get(t, Fraction(0)) for t in range(n))))
    return bad


# -- central series --------------------------------------------------------
@dataclass(frozen=True)
class SeriesProfile:
    terms: tuple            # C^0 g, C^1 g, ..., ending at {0} or at the stable term
    nilpotent: bool
    nilindex: int | None
    type_sequence: tuple

    @property
    def dims(self) -> tuple:
        return tuple(t.dim for t in self.terms)


def bracket_span(g: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    """[a, b] as a subspace."""
    vecs = []
    for u in a.basis:
        su = {i: c for i, c in enumerate(u) if c}
        for w in b.basis:
            sw = {i: c for i, c in enumerate(w) if c}
            r = _sparse_bracket(g, su, sw)
            if r:
                vecs.append(tuple(r.get(t, Fraction(0)) for t in range(g.dim)))
    return Subspace.span(vecs, g.dim)


def derived_term(g: LieAlgebra, s: Subspace) -> Subspace:
    """[s, g] spanned by brackets of a basis of s with the basis of g."""
    n = g.dim
    vecs = []
    for u in s.basis:
        su = {i: c for i, c in enumerate(u) if c}
        for j in range(n):
            r = _sparse_bracket(g, su, {j: 1})
            if r:
                vecs.append(tuple(r.get(t, Fraction(0)) for t in range(n)))
    return Subspace.span(vecs, n)


def lower_central_series(g: LieAlgebra) -> SeriesProfile:
    terms = [Subspace.full(g.dim)]
    while terms[-1].dim:
        nxt = derived_term(g, terms[-1])
        if nxt.dim == terms[-1].dim:
            return SeriesProfile(tuple(terms), False, None, ())
        terms.append(nxt)
    dims = [t.dim for t in terms]
    types = tuple(dims[i - 1] - dims[i] for i in range(1, len(dims)))
    return SeriesProfile(tuple(terms), True, len(terms) - 1, types)


def _require_nilpotent(g: LieAlgebra) -> SeriesProfile:
    prof = lower_central_series(g)
    if not prof.nilpotent:
        raise NotNilpotentError("algebra is not nilpotent (central series stabilizes)")
    return prof


def nilindex(g: LieAlgebra) -> int:
    return _require_nilpotent(g).nilindex


def is_filiform(g: LieAlgebra) -> bool:
    prof = _require_nilpotent(g)
    n = g.dim
    dims = prof.dims
    for k in range(1, n):
        d = dims[k] if k < len(dims) else 0
        if d != max(n - k - 1, 0):
            return False
    return True


def center(g: LieAlgebra) -> Subspace:
    return centralizer(g, Subspace.full(g.dim))


def centralizer(g: LieAlgebra, s: Subspace) -> Subspace:
    """{x : [x, v] = 0 for all v in s}, as the kernel of the stacked ad(v)."""
    if s.ambient_dim != g.dim:
        from .exactla import AmbientMismatch
        raise AmbientMismatch(f"subspace of Q^{s.ambient_dim} in a {g.dim}-dim algebra")
    rows = []
    for v in s.basis:
        rows.extend(g.ad_matrix(v))
    from .exactla import nullspace_basis
    return Subspace.span(nullspace_basis(rows, g.dim), g.dim) if rows else Subspace.full(g.dim)


def derivation_dim(g: LieAlgebra) -> int:
    """dim Der(g): unknowns D[i][j] (coefficient of X_i in D X_j), one row per
    coordinate of D[X_a, X_b] - [D X_a, X_b] - [X_a, D X_b]."""
    from .exactla import rank
    n = g.dim
    rows = []
    for a, b in combinations(range(n), 2):
        comp: dict = {}
        for k, c in g.basis_bracket(a, b).items():
            for i in range(n):
                r = comp.setdefault(i, {})
                r[i * n + k] = r.get(i * n + k, 0) + c
        for i in range(n):
            for k, c in g.basis_bracket(i, b).items():
                r = comp.setdefault(k, {})
                r[i * n + a] = r.get(i * n + a, 0) - c
            for k, c in g.basis_bracket(a, i).items():
                r = comp.setdefault(k, {})
                r[i * n + b] = r.get(i * n + b, 0) - c
        for r in comp.values():
            row = [Fraction(0)] * (n * n)
            for t, v in r.items():
                row[t] += v
            if any(row):
                rows.append(row)
    return n * n - (rank(rows, n * n) if rows else 0)


def is_abelian_subspace(g: LieAlgebra, s: Subspace) -> bool:
    return bracket_span(g, s, s).dim == 0


# -- Jordan blocks -------------------------------------------------------------
def _integer_matrix(m: list[list[Fraction]]) -> list[list[int]]:
    den = 1
    for row in m:
        for x in row:
            if x.denominator != 1:
                den = lcm(den, x.denominator)
    return [[int(x * den) for x in row] for row in m]


def ad_power_ranks(g: LieAlgebra, x: Sequence) -> list[int]:
    """[rank ad(x)^0, rank ad(x)^1, ...] down to 0."""
    a = _integer_matrix(g.ad_matrix(x))
    n = g.dim
    cols = [[a[k][j] for k in range(n)] for j in range(n)]   # ad(x) X_j
    image = [c for c in cols if any(c)]
    image, _ = kernel.echelon(image, n, reduced=False)
    ranks = [n, len(image)]
    while image:
        nxt = []
        for v in image:
            w = [0] * n
            for j, vj in enumerate(v):
                if vj:
                    cj = cols[j]
                    for k in range(n):
                        if cj[k]:
                            w[k] += vj * cj[k]
            if any(w):
                nxt.append(w)
        nxt, _ = kernel.echelon(nxt, n, reduced=False)
        if len(nxt) == len(image):
            raise NotNilpotentError("ad(x) is not nilpotent")
        image = nxt
        ranks.append(len(image))
    return ranks


def jordan_block_sequence(g: LieAlgebra, x: Sequence) -> tuple:
    """Jordan block sizes of the nilpotent operator ad(x), non-increasing."""
    r = ad_power_ranks(g, x) + [0]
    blocks = []
    for s in range(1, len(r) - 1):
        at_least = r[s - 1] - r[s]
        at_least_next = r[s] - r[s + 1]
        blocks.extend([s] * (at_least - at_least_next))
    return tuple(sorted(blocks, reverse=True))


@dataclass(frozen=True)
class CharacteristicSequence:
    blocks: tuple
    witness: tuple
    generic_agreement: bool      # all pseudo-random candidates reached ``blocks``
    candidates: int

    def __iter__(self):
        return iter(self.blocks)


def _generator_indices(g: LieAlgebra, c1: Subspace) -> list[int]:
    return [i for i in range(g.dim) if not c1.contains(unit_vector(g.dim, i))]


def characteristic_sequence(g: LieAlgebra, seed: int = 0, samples: int = 8) -> CharacteristicSequence:
    """Lexicographic maximum of c(X) over a deterministic candidate set.

    Candidates: basis vectors outside C^1 g, their pairwise sums, and
    ``samples`` pseudo-random rational combinations (``seed`` fixed).  The
    maximum is a certified lower bound; it is the generic value whenever all
    random candidates agree with it.
    """
    n = g.dim
    prof = _require_nilpotent(g)
    c1 = prof.terms[1] if len(prof.terms) > 1 else Subspace.zero(n)
    gens = _generator_indices(g, c1)
    if g.is_abelian():
        w = unit_vector(n, 0) if n else ()
        return CharacteristicSequence((1,) * n, w, True, 1)
    cands = [unit_vector(n, i) for i in gens]
    for i, j in combinations(gens, 2):
        v = [Fraction(0)] * n
        v[i] = v[j] = Fraction(1)
        cands.append(tuple(v))
    rng = random.Random(seed)
    rand = []
    while len(rand) < samples:
        v = tuple(Fraction(rng.randint(-30, 30), rng.randint(1, 7)) for _ in range(n))
        if not c1.contains(v):
            rand.append(v)
    best, wit = None, None
    seen = []
    for v in cands + rand:
        c = jordan_block_sequence(g, v)
        seen.append(c)
        if best is None or c > best:
            best, wit = c, v
    generic = all(c == best for c in seen[len(cands):])
    return CharacteristicSequence(best, wit, generic, len(seen))


# -- centralizer property ------------------------------------------------------
@dataclass(frozen=True)
class CentralizerReport:
    holds_P: bool
    variant: str                 # "P1", "P2" or "neither"
    frontier: int
    nilindex: int
    abelian_terms: tuple         # (p, C^p g abelian) for 1 <= p < nilindex
    witnesses: tuple             # ((x, y, [x, y]), ...) supporting the variant
    frontier_alt: int            # floor((n(g) - 1) / 2), the alternative threshold
    holds_P_alt: bool
    notes: tuple = field(default=())

    @property
    def frontier_sensitive(self) -> bool:
        return self.holds_P != self.holds_P_alt


def _holds(abelian: dict, nil: int, k: int) -> bool:
    for p in range(1, nil):
        if p >= k and not abelian[p]:
            return False
        if p < k and abelian[p]:
            return False
    return True


def centralizer_property(g: LieAlgebra) -> CentralizerReport:
    """Evaluate the centralizer property and classify it as P1 / P2.

    With k = floor(n(g)/2): for 1 <= p < n(g) the ideal C^p g must lie in its
    own centralizer (be abelian) exactly when p >= k.  Writing W = C^{k-1} g
    and V = C^k g, the variant is P1 when [W, W] is not contained in [V, W]
    (a nonzero bracket between two elements of W outside V that cannot be
    absorbed by V), and P2 when [W, W] is nonzero but every nonzero bracket
    in W comes through V.
    """
    prof = _require_nilpotent(g)
    nil = prof.nilindex
    terms = prof.terms
    k = nil // 2
    k_alt = (nil - 1) // 2
    abelian = {p: is_abelian_subspace(g, terms[p]) for p in range(1, nil)}
    holds = _holds(abelian, nil, k)
    holds_alt = _holds(abelian, nil, k_alt)
    variant = "neither"
    witnesses: list = []
    if k >= 1:
        W, V = terms[k - 1], terms[k]
        VW = bracket_span(g, V, W)
        comp = W.complement_basis(V)
        p1 = []
        for a, b in combinations(comp, 2):
            z = bracket(g, a, b)
            if any(z) and not VW.contains(z):
                p1.append((a, b, z))
                break
        p2 = []
        if not p1:
            for a in W.basis:
                for b in V.basis:
                    z = bracket(g, a, b)
                    if any(z):
                        p2.append((a, b, z))
                        break
                if p2:
                    break
        if holds and p1:
            variant, witnesses = "P1", p1
        elif holds and p2:
            variant, witnesses = "P2", p2
    return CentralizerReport(holds, variant, k, nil, tuple(sorted(abelian.items())),
                             tuple(witnesses), k_alt, holds_alt)


def quotient_by_last(g: LieAlgebra) -> LieAlgebra:
    """g / <X_n> when X_n is central: drop the last coordinate."""
    n = g.dim
    z = unit_vector(n, n - 1)
    if any(any(row) for row in g.ad_matrix(z)):
        raise ValueError("last basis vector is not central")
    table = {}
    for (i, j), row in g.bracket_table().items():
        r = {k: c for k, c in row.items() if k != n - 1}
        if r:
            table[(i, j)] = r
    degrees = g.degrees[:-1] if g.degrees else None
    return LieAlgebra(n - 1, table, g.labels[:-1], degrees)


def direct_sum_abelian(g: LieAlgebra, extra: int = 1) -> LieAlgebra:
    """g (+) Q^extra, the new basis vectors appended and central."""
    labels = g.labels + tuple(f"X{g.dim + i + 1}" for i in range(extra))
    degrees = g.degrees + (1,) * extra if g.degrees else None
    return LieAlgebra(g.dim + extra, g.bracket_table(), labels, degrees)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, degrees=(1,) * n, name=f"ab{n}")


def heisenberg() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): {2: 1}}, degrees=(1, 1, 2), name="h3")


def vector_of(g: LieAlgebra, coords: Mapping[int, object] | Iterable) -> tuple:
    if isinstance(coords, Mapping):
        v = list(zero_vector(g.dim))
        for i, c in coords.items():
            v[i] = as_fraction(c)
        return tuple(v)
    return vec(coords)


__all__ = [
    "LieAlgebra", "NotNilpotentError", "SeriesProfile", "CharacteristicSequence",
    "CentralizerReport", "bracket", "jacobi_defect", "jacobi_violations",
    "lower_central_series", "nilindex", "is_filiform", "center", "centralizer",
    "jordan_block_sequence", "ad_power_ranks", "characteristic_sequence",
    "centralizer_property", "bracket_span", "derived_term", "quotient_by_last",
    "direct_sum_abelian", "abelian", "heisenberg", "vector_of", "is_abelian_subspace",
    "integer_row",
]
