"""One-dimensional central extensions of graded nilpotent algebras.

A cochain c of degree d on a graded algebra g gives the law
[X_i, X_j]_new = [X_i, X_j] + c(X_i, X_j) X_{n+1}, with X_{n+1} central of
degree d.  Candidates live in the slice H_d = Z_d / B_d of the cohomology.

Equivalence.  Two candidates give isomorphic graded extensions when they lie
in one orbit of the graded automorphism group of g (together with rescaling
of X_{n+1} and adding coboundaries).  The identity component of that group is
generated by the degree-0 derivations, so orbits are found from tangent
spaces: at c the orbit has tangent span{D.c} + <c>.  Inside an invariant
subspace U of H_d the points where this span is all of U form a single open
orbit; where its rank drops (the exceptional locus, cut out by minors) we
recurse.  A stratum whose generic rank is below dim U carries moduli and is
reported as such instead of being split further.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from .cohomology import TwoCochain, h2_dim, omega_generators, pair_index
from .exactla import Subspace, as_fraction, nullspace_basis, rank, solve
from .grading import Grading, filtration_degrees, is_graded_law, natural_graded_verdict
from .liecore import (LieAlgebra, bracket_span, center, centralizer, centralizer_property, characteristic_sequence,
                      derivation_dim, jacobi_violations, lower_central_series, quotient_by_last)


class ExtensionError(ValueError):
    pass


# ---------------------------------------------------------------------------
# building extensions

def central_extend(g: LieAlgebra, c: TwoCochain, degree: int | None = None, label: str | None = None,
                   name: str | None = None, check: bool = True) -> LieAlgebra:
    """g extended by the cocycle c; the new vector is appended last."""
    if c.dim != g.dim:
        raise ValueError(f"cochain on dimension {c.dim}, algebra has {g.dim}")
    n = g.dim
    table = g.bracket_table()
    for (i, j), a in c.coeffs.items():
        row = dict(table.get((i, j), {}))
        row[n] = a
        table[(i, j)] = row
    labels = g.labels + (label or _next_label(g),)
    degrees = None
    if g.degrees is not None:
        degrees = g.degrees + (degree if degree is not None else _cochain_degree(g, c),)
    ext = LieAlgebra(n + 1, table, labels, degrees, name)
    if check:
        bad = jacobi_violations(ext)
        if bad:
            i, j, k, _ = bad[0]
            raise ExtensionError(f"cochain is not a cocycle: Jacobi fails on "
                                 f"({labels[i]}, {labels[j]}, {labels[k]})")
    return ext


def _next_label(g: LieAlgebra) -> str:
    nums = [int(l[1:]) for l in g.labels if l.startswith("X") and l[1:].isdigit()]
    return f"X{max(nums) + 1}" if nums else f"X{g.dim + 1}"


def _cochain_degree(g: LieAlgebra, c: TwoCochain) -> int:
    degs = {g.degrees[i] + g.degrees[j] for i, j in c.coeffs}
    if len(degs) > 1:
        raise ValueError("cochain is not homogeneous; pass degree explicitly")
    return degs.pop() if degs else 1


def cochain_of_last(g: LieAlgebra) -> TwoCochain:
    """The cocycle that recovers g from g / <X_n> (coefficients on X_n)."""
    n = g.dim
    return TwoCochain(n - 1, {(i, j): c for i, j, k, c in g.structure_constants() if k == n - 1})


# ---------------------------------------------------------------------------
# graded derivations and the slice H_d

def graded_derivations(g: LieAlgebra, degrees: Sequence[int] | None = None) -> list:
    """Basis of degree-0 derivations as matrices D (D[i][j] = coefficient of X_i in D X_j)."""
    deg = tuple(degrees) if degrees is not None else g.degrees
    n = g.dim
    var = [(i, j) for i in range(n) for j in range(n) if deg[i] == deg[j]]
    pos = {v: a for a, v in enumerate(var)}
    rows = []
    # D[X_a, X_b] - [D X_a, X_b] - [X_a, D X_b] = 0
    for a, b in combinations(range(n), 2):
        comp: dict = {}
        for k, c in g.basis_bracket(a, b).items():
            for i in range(n):
                if (i, k) in pos:
                    r = comp.setdefault(i, {})
                    r[pos[(i, k)]] = r.get(pos[(i, k)], 0) + c
        for i in range(n):
            if (i, a) in pos:
                for k, c in g.basis_bracket(i, b).items():
                    r = comp.setdefault(k, {})
                    r[pos[(i, a)]] = r.get(pos[(i, a)], 0) - c
            if (i, b) in pos:
                for k, c in g.basis_bracket(a, i).items():
                    r = comp.setdefault(k, {})
                    r[pos[(i, b)]] = r.get(pos[(i, b)], 0) - c
        for r in comp.values():
            row = [Fraction(0)] * len(var)
            for p, v in r.items():
                row[p] += v
            if any(row):
                rows.append(row)
    out = []
    for s in nullspace_basis(rows, len(var)):
        D = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in zip(var, s):
            D[i][j] = v
        out.append(D)
    return out


@dataclass
class GradedSlice:
    """Z_d, B_d and H_d = Z_d / B_d on the pairs of degree d."""

    base: LieAlgebra
    degree: int
    support: list                   # pairs (i, j), 0-based, lexicographic
    cocycles: Subspace              # Z_d in Q^support
    coboundaries: Subspace          # B_d
    h_basis: list                   # complement of B_d in Z_d

    @property
    def h_dim(self) -> int:
        return len(self.h_basis)

    def cochain(self, v: Sequence) -> TwoCochain:
        return TwoCochain(self.base.dim, {p: a for p, a in zip(self.support, v) if a})

    def restrict(self, c: TwoCochain) -> tuple:
        pos = {p: a for a, p in enumerate(self.support)}
        v = [Fraction(0)] * len(self.support)
        for p, a in c.coeffs.items():
            if p not in pos:
                raise ValueError(f"cochain has a term on pair {p} outside degree {self.degree}")
            v[pos[p]] = a
        return tuple(v)

    def from_h(self, x: Sequence) -> tuple:
        v = [Fraction(0)] * len(self.support)
        for a, z in zip(x, self.h_basis):
            if a:
                for t in range(len(v)):
                    v[t] += a * z[t]
        return tuple(v)

    def to_h(self, v: Sequence) -> tuple:
        """Coordinates of a cocycle in H_d (its class mod B_d)."""
        cols = list(self.h_basis) + list(self.coboundaries.basis)
        rows = [[col[t] for col in cols] for t in range(len(self.support))]
        x = solve(rows, list(v), len(cols))
        if x is None:
            raise ValueError("vector is not a cocycle of this degree")
        return tuple(x[:self.h_dim])

    def act(self, D, v: Sequence) -> tuple:
        """D.c = -c(D x, y) - c(x, D y), as a vector on the support."""
        pos = {p: a for a, p in enumerate(self.support)}
        n = self.base.dim
        out = [Fraction(0)] * len(self.support)
        for (a, b), t in pos.items():
            s = Fraction(0)
            for i in range(n):
                if D[i][a]:
                    s -= D[i][a] * _val(v, pos, i, b)
                if D[i][b]:
                    s -= D[i][b] * _val(v, pos, a, i)
            out[t] = s
        return tuple(out)

    def h_action(self, derivations) -> list:
        """Matrices of the derivations acting on H_d coordinates."""
        mats = []
        for D in derivations:
            cols = [self.to_h(self.act(D, z)) for z in self.h_basis]
            mats.append([[cols[c][r] for c in range(self.h_dim)] for r in range(self.h_dim)])
        return mats


def _val(v, pos, i, j):
    if i == j:
        return 0
    if i < j:
        t = pos.get((i, j))
        return v[t] if t is not None else 0
    t = pos.get((j, i))
    return -v[t] if t is not None else 0


def graded_slice(g: LieAlgebra, degree: int, degrees: Sequence[int] | None = None) -> GradedSlice:
    deg = tuple(degrees) if degrees is not None else g.degrees
    if deg is None:
        raise ValueError("algebra carries no degrees")
    n = g.dim
    support = [(i, j) for i, j in combinations(range(n), 2) if deg[i] + deg[j] == degree]
    pos = {p: a for a, p in enumerate(support)}
    rows = []
    for gen in omega_generators(g):
        r = [Fraction(0)] * len(support)
        for p, a in gen.items():
            if p in pos:
                r[pos[p]] += a
        if any(r):
            rows.append(r)
    if rows:
        Z = Subspace.span(nullspace_basis(rows, len(support)), len(support))
    else:
        Z = Subspace.full(len(support))
    bvecs = []
    for k in range(n):
        if deg[k] != degree:
            continue
        v = [Fraction(0)] * len(support)
        for i, j, kk, c in g.structure_constants():
            if kk == k:
                v[pos[(i, j)]] += c
        if any(v):
            bvecs.append(v)
    B = Subspace.span(bvecs, len(support))
    return GradedSlice(g, degree, support, Z, B, list(Z.complement_basis(B)))


# ---------------------------------------------------------------------------
# orbit strata in H_d

@dataclass(frozen=True)
class Stratum:
    basis: tuple                    # vectors in H_d coordinates spanning the invariant subspace U
    kind: str                       # "open", "point", "moduli"
    orbit_dim: int                  # dimension of a generic orbit in U (scaling included)

    @property
    def dim(self) -> int:
        return len(self.basis)


def _mat_vec(M, x):
    return tuple(sum((M[r][c] * x[c] for c in range(len(x)) if x[c]), Fraction(0)) for r in range(len(M)))


def _coords_in(basis, v):
    rows = [[b[t] for b in basis] for t in range(len(v))]
    return solve(rows, list(v), len(basis))


def _restrict(mats, basis):
    """Action on span(basis) in its own coordinates; None when not invariant."""
    out = []
    for M in mats:
        cols = []
        for b in basis:
            x = _coords_in(basis, _mat_vec(M, b))
            if x is None:
                return None
            cols.append(x)
        out.append([[cols[c][r] for c in range(len(basis))] for r in range(len(basis))])
    return out


def _tangent_rank(mats, x) -> int:
    cols = [_mat_vec(M, x) for M in mats] + [tuple(x)]
    return rank([list(c) for c in cols], len(x))


def _generic_rank(mats, u, rng) -> tuple[int, tuple]:
    best, witness = -1, None
    for _ in range(6):
        x = tuple(Fraction(rng.randint(-97, 97)) for _ in range(u))
        if not any(x):
            continue
        r = _tangent_rank(mats, x)
        if r > best:
            best, witness = r, x
    return best, witness


def _exceptional_components(mats, u) -> list:
    """Linear subspaces (bases in local coordinates) whose union is the rank-drop locus."""
    import sympy as sp
    xs = sp.symbols(f"x0:{u}")
    cols = [[sum(sp.Rational(M[r][c].numerator, M[r][c].denominator) * xs[c] for c in range(u))
             for r in range(u)] for M in mats]
    cols.append(list(xs))
    eqs = set()
    for pick in combinations(range(len(cols)), u):
        det = sp.expand(sp.Matrix([[cols[p][r] for p in pick] for r in range(u)]).det())
        if det != 0:
            eqs.add(det)
    if not eqs:
        return [[tuple(Fraction(int(a == b)) for b in range(u)) for a in range(u)]]
    comps = []
    for sol in sp.solve(sorted(eqs, key=sp.default_sort_key), xs, dict=True):
        free = [x for x in xs if x not in sol]
        exprs = [sol.get(x, x) for x in xs]
        basis = []
        for f in free:
            vec = []
            for e in exprs:
                poly = sp.Poly(e, *free) if free else None
                if poly is not None and poly.total_degree() > 1:
                    raise ExtensionError("exceptional locus is not a union of linear subspaces")
                val = e.subs({y: (1 if y == f else 0) for y in free})
                if not val.is_rational:
                    raise ExtensionError("exceptional locus has irrational points")
                vec.append(Fraction(int(val.p), int(val.q)))
            basis.append(tuple(vec))
        basis = list(Subspace.span(basis, u).basis) if basis else []
        if basis:
            comps.append(basis)
    return comps


def orbit_strata(mats, h: int, seed: int = 0) -> list[Stratum]:
    """Decompose H_d (dimension h, action matrices ``mats``) into orbit strata."""
    rng = random.Random(seed)
    out: list[Stratum] = []
    seen: set = set()

    def visit(basis):
        key = Subspace.span(basis, h).basis
        if key in seen:
            return
        seen.add(key)
        u = len(basis)
        if u == 0:
            return
        if u == 1:
            out.append(Stratum(tuple(basis), "point", 1))
            return
        local = _restrict(mats, basis)
        if local is None:
            raise ExtensionError("rank-drop component is not invariant")
        r, _ = _generic_rank(local, u, rng)
        if r < u:
            out.append(Stratum(tuple(basis), "moduli", r))
            return
        out.append(Stratum(tuple(basis), "open", u))
        for comp in _exceptional_components(local, u):
            glob = [tuple(sum((c[a] * basis[a][t] for a in range(u)), Fraction(0)) for t in range(h))
                    for c in comp]
            if len(glob) < u:
                visit(list(Subspace.span(glob, h).basis))

    if h:
        visit([tuple(Fraction(int(a == b)) for b in range(h)) for a in range(h)])
    return out


def locate(strata: list[Stratum], mats, x: Sequence) -> int | None:
    """Index of the stratum whose open part contains x (x in H_d coordinates)."""
    if not any(x):
        return None
    best = None
    for s_idx, s in enumerate(strata):
        c = _coords_in(list(s.basis), x)
        if c is None:
            continue
        local = _restrict(mats, list(s.basis))
        r = _tangent_rank(local, c)
        if r == s.orbit_dim and (best is None or s.dim < strata[best].dim):
            best = s_idx
    return best


# ---------------------------------------------------------------------------
# enumeration

@dataclass(frozen=True)
class ExtensionSpec:
    target_degree: int | None = None
    target_nilindex: int | None = None
    required_charseq: tuple | None = None
    require_P2: bool = False
    family: tuple | None = None     # (depth, (k_1, .., k_r)); depth an int or a half-integer
    require_natural: bool = True
    new_label: str | None = None

    def resolved_degree(self) -> int:
        fam_deg = None
        if self.family is not None:
            t = Fraction(self.family[0])
            if t.denominator == 1:
                fam_deg = 2 * int(t) + 1
            elif t.denominator == 2:
                fam_deg = int(2 * t) + 1
            else:
                raise ValueError(f"depth {t} is neither integral nor half-integral")
        if self.target_degree is not None and fam_deg is not None and fam_deg != self.target_degree:
            raise ValueError(f"inconsistent spec: depth {self.family[0]} means degree {fam_deg}, "
                             f"target_degree is {self.target_degree}")
        d = self.target_degree if self.target_degree is not None else fam_deg
        if d is None:
            raise ValueError("inconsistent spec: neither target_degree nor family given")
        return d

    def label_sums(self) -> set | None:
        """Allowed printed-index sums i + j when a k-list is given."""
        if self.family is None or not self.family[1]:
            return None
        t = Fraction(self.family[0])
        base = 2 * int(t) + 1 if t.denominator == 1 else int(2 * t) + 1
        return {base + int(k) for k in self.family[1]}


@dataclass
class ExtensionClass:
    base: LieAlgebra
    cochain: TwoCochain
    extended: LieAlgebra
    certificate: dict = field(default_factory=dict)


def _printed_index(g: LieAlgebra, i: int) -> int:
    lab = g.labels[i]
    return int(lab[1:]) if lab.startswith("X") and lab[1:].isdigit() else i + 1


def _normalize(sl: GradedSlice, v: Sequence) -> tuple[tuple, str]:
    v = sl.coboundaries.reduce(v) if sl.coboundaries.dim else tuple(v)
    lead = next((t for t, (i, _) in enumerate(sl.support) if i == 0 and v[t]), None)
    how = "coefficient of the X1 pair set to 1"
    if lead is None:
        lead = next(t for t, a in enumerate(v) if a)
        how = "first nonzero coefficient set to 1"
    s = v[lead]
    return tuple(a / s for a in v), how


def _small_points(u: int, limit: int = 4000):
    """Small integer vectors ordered by support size, then by height."""
    count = 0
    for size in range(1, u + 1):
        for support in combinations(range(u), size):
            for vals in product((1, -1, 2, -2, 3), repeat=size):
                if vals[0] != 1:
                    continue
                x = [Fraction(0)] * u
                for a, val in zip(support, vals):
                    x[a] = Fraction(val)
                yield tuple(x)
                count += 1
                if count >= limit:
                    return


def _stratum_rep(sl, strata, mats, s_idx, allowed: Subspace | None):
    """A simple point of stratum s_idx, inside ``allowed`` (H coordinates) when given."""
    s = strata[s_idx]
    span = Subspace.span(s.basis, sl.h_dim)
    pool = span if allowed is None else span.intersect(allowed)
    if pool.dim == 0:
        return None
    basis = list(pool.basis)
    x1_pairs = [t for t, (i, _) in enumerate(sl.support) if i == 0]
    first = None
    # prefer a point with an X1 term, the usual way new forms are written
    for c in _small_points(len(basis)):
        x = tuple(sum((c[a] * basis[a][t] for a in range(len(basis))), Fraction(0)) for t in range(sl.h_dim))
        if locate(strata, mats, x) != s_idx:
            continue
        v = sl.coboundaries.reduce(sl.from_h(x)) if sl.coboundaries.dim else sl.from_h(x)
        if any(v[t] for t in x1_pairs):
            return x
        if first is None:
            first = x
    if first is not None:
        return first
    rng = random.Random(len(basis))
    for _ in range(50):
        c = [Fraction(rng.randint(-50, 50)) for _ in basis]
        x = tuple(sum((c[a] * basis[a][t] for a in range(len(basis))), Fraction(0)) for t in range(sl.h_dim))
        if locate(strata, mats, x) == s_idx:
            return x
    return None


def enumerate_graded_extensions(g: LieAlgebra, gr: Grading | Sequence[int] | None, spec: ExtensionSpec,
                                seed: int = 0) -> list[ExtensionClass]:
    """Graded one-dimensional central extensions of g passing ``spec``, one per class."""
    deg = gr.degrees if isinstance(gr, Grading) else (tuple(gr) if gr is not None else g.degrees)
    if deg is None:
        raise ValueError("algebra carries no degrees")
    if not is_graded_law(g, deg):
        raise ValueError("base law is not graded for the given degrees")
    g = g.with_degrees(deg) if g.degrees != tuple(deg) else g
    d = spec.resolved_degree()
    sl = graded_slice(g, d)
    if not sl.support or sl.h_dim == 0:
        return []
    ders = graded_derivations(g)
    mats = sl.h_action(ders)
    strata = orbit_strata(mats, sl.h_dim, seed)

    allowed = None
    sums = spec.label_sums()
    if sums is not None:
        keep = [t for t, (i, j) in enumerate(sl.support)
                if _printed_index(g, i) + _printed_index(g, j) in sums]
        if not keep:
            return []
        # cocycles supported on the selected pairs, then their classes in H_d
        drop = [t for t in range(len(sl.support)) if t not in keep]
        rows = [list(r) for r in _constraint_rows(sl)]
        rows += [[Fraction(int(c == t)) for c in range(len(sl.support))] for t in drop]
        sub = nullspace_basis(rows, len(sl.support))
        allowed = Subspace.span([sl.to_h(v) for v in sub], sl.h_dim)
        if allowed.dim == 0:
            return []

    out = []
    for s_idx, s in enumerate(strata):
        x = _stratum_rep(sl, strata, mats, s_idx, allowed)
        if x is None:
            continue
        v, how = _normalize(sl, sl.from_h(x))
        c = sl.cochain(v)
        ext = central_extend(g, c, degree=d, label=spec.new_label)
        cert = {"degree": d, "support": [(g.labels[i], g.labels[j]) for i, j in sl.support],
                "h_dim": sl.h_dim, "derivations": len(ders), "stratum": s.kind,
                "stratum_dim": s.dim, "orbit_dim": s.orbit_dim, "normalization": how,
                "h_coordinates": [str(a) for a in x]}
        cls = ExtensionClass(g, c, ext, cert)
        if _passes(cls, spec, seed):
            out.append(cls)
    return out


def _constraint_rows(sl: GradedSlice):
    """Rows whose kernel is Z_d."""
    z = sl.cocycles
    if z.dim == len(sl.support):
        return []
    # Z_d is the kernel of its annihilator
    return nullspace_basis([list(b) for b in z.basis], len(sl.support)) if z.dim else \
        [[Fraction(int(a == b)) for b in range(len(sl.support))] for a in range(len(sl.support))]


def _passes(cls: ExtensionClass, spec: ExtensionSpec, seed: int) -> bool:
    ext = cls.extended
    prof = lower_central_series(ext)
    cls.certificate["nilindex"] = prof.nilindex
    if spec.target_nilindex is not None and prof.nilindex != spec.target_nilindex:
        return False
    if spec.required_charseq is not None or spec.require_P2:
        cs = characteristic_sequence(ext, seed=seed).blocks
        cls.certificate["charseq"] = cs
        if spec.required_charseq is not None and tuple(cs) != tuple(spec.required_charseq):
            return False
    if spec.require_P2:
        var = centralizer_property(ext).variant
        cls.certificate["variant"] = var
        if var != "P2":
            return False
    if spec.require_natural:
        verdict = natural_graded_verdict(ext, seed=seed).verdict
        cls.certificate["natural"] = verdict
        if verdict != "naturally graded":
            return False
    return True


def reduce_by_equivalence(candidates: list[ExtensionClass], seed: int = 0) -> list[ExtensionClass]:
    """One representative per orbit; the first candidate of each orbit is kept."""
    if not candidates:
        return []
    base = candidates[0].base
    degs = {_cochain_degree(base, c.cochain) for c in candidates if c.cochain}
    if len(degs) > 1:
        raise ValueError("candidates of different degrees")
    if not degs:
        return candidates[:1]
    sl = graded_slice(base, degs.pop())
    mats = sl.h_action(graded_derivations(base))
    strata = orbit_strata(mats, sl.h_dim, seed)
    keep, keys = [], set()
    for cand in candidates:
        x = sl.to_h(sl.restrict(cand.cochain))
        s_idx = locate(strata, mats, x)
        if s_idx is None:
            key = ("trivial",)
        elif strata[s_idx].kind == "moduli":
            v, _ = _normalize(sl, sl.from_h(x))
            key = ("moduli", s_idx, v)
        else:
            key = ("orbit", s_idx)
        if key not in keys:
            keys.add(key)
            keep.append(cand)
    return keep


# ---------------------------------------------------------------------------
# towers and fingerprints

def extension_tower(family: str, q_max: int, **params) -> list[LieAlgebra]:
    """g_0, .., g_{q_max} of a tower family, each step checked as a central extension.

    ``family`` is one of the q-families of ``models.TOWER_BASE``; g_0 is its base model.
    """
    from .models import TOWER_BASE, ModelId, claimed_charseq, make
    if family not in TOWER_BASE:
        raise ValueError(f"{family} is not a tower family; choose from {sorted(TOWER_BASE)}")
    if q_max < 0:
        raise ValueError("q_max must be >= 0")
    algs = [make(ModelId.of(TOWER_BASE[family], **params))]
    for q in range(1, q_max + 1):
        mid = ModelId.of(family, q=q, **params)
        g_q = make(mid)
        prev = algs[-1]
        c = cochain_of_last(g_q)
        rebuilt = central_extend(prev, c, degree=g_q.degrees[-1], label=g_q.labels[-1])
        if rebuilt != g_q or quotient_by_last(g_q) != prev:
            raise ExtensionError(f"{mid} is not a central extension of the previous step")
        cs = characteristic_sequence(g_q).blocks
        if tuple(cs) != tuple(claimed_charseq(mid)):
            raise ExtensionError(f"{mid}: characteristic sequence {cs}, claimed {claimed_charseq(mid)}")
        algs.append(g_q)
    return algs


@dataclass(frozen=True)
class Fingerprint:
    dim: int
    type_sequence: tuple
    charseq: tuple
    h2_dim: int
    center_dim: int
    centralizer_dims: tuple         # dim C_g(C^p g) for p = 1 .. nilindex-1
    variant: str
    derived_dims: tuple             # dims of the derived series below g
    graded_derivations: int | None  # degree-0 derivations for the filtration grading
    derivation_dim: int


def fingerprint(g: LieAlgebra, seed: int = 0) -> Fingerprint:
    prof = lower_central_series(g)
    cs = (1,) * g.dim if g.is_abelian() else characteristic_sequence(g, seed=seed).blocks
    cdims = tuple(centralizer(g, prof.terms[p]).dim for p in range(1, prof.nilindex))
    derived, s = [], Subspace.full(g.dim)
    while s.dim:
        s = bracket_span(g, s, s)
        derived.append(s.dim)
    fdeg = filtration_degrees(g)
    nder = None
    if fdeg is not None and is_graded_law(g, fdeg):
        nder = len(graded_derivations(g, fdeg))
    return Fingerprint(g.dim, prof.type_sequence, tuple(cs), h2_dim(g), center(g).dim, cdims,
                       centralizer_property(g).variant if not g.is_abelian() else "neither",
                       tuple(derived), nder, derivation_dim(g))


def same_fingerprint(a: LieAlgebra, b: LieAlgebra) -> bool:
    return fingerprint(a) == fingerprint(b)


def filiform_chain(max_dim: int, seed: int = 0) -> dict[int, list[LieAlgebra]]:
    """Naturally graded filiform algebras by dimension, grown from L_3 by graded extensions.

    Each step raises the nilindex by one, so the new vector sits one degree above the top;
    classes are merged by fingerprint.
    """
    from .models import make
    layer = [make("L:n=3")]
    out = {4: layer}
    for n in range(4, max_dim):
        new, fps = [], []
        for g in layer:
            spec = ExtensionSpec(target_degree=max(g.degrees) + 1, target_nilindex=n)
            for cls in enumerate_graded_extensions(g, None, spec, seed=seed):
                fp = fingerprint(cls.extended, seed)
                if fp not in fps:
                    fps.append(fp)
                    new.append(cls.extended)
        out[n + 1] = layer = new
    return out
