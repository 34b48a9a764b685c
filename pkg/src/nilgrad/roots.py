"""Positive roots of the simple types, height strata, and the centralizer
property of Borel nilradicals read off from root sums.

Roots are integer coefficient vectors over the simple roots, Bourbaki
numbering.  Positive roots are generated from the simple ones by root
strings: for a root b and a simple root a_i with b - p a_i the bottom of the
a_i-string, b + a_i is a root iff p - <b, a_i^v> > 0.

For the nilradical n of the Borel subalgebra the descending series is
C^p n = span{e_a : ht(a) > p}, and [e_a, e_b] is nonzero exactly when a + b
is a root (Chevalley basis), so every question about (P) reduces to which
sums of positive roots are roots.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

MAX_CLASSICAL_RANK = 8


class RootSystemError(ValueError):
    pass


def _gram(letter: str, l: int) -> list:
    """Inner products (a_i, a_j) of the simple roots."""
    G = [[Fraction(0)] * l for _ in range(l)]

    def link(i, j, v):
        G[i][j] = G[j][i] = Fraction(v)

    if letter in "ADE":
        for i in range(l):
            G[i][i] = Fraction(2)
        if letter == "A":
            for i in range(l - 1):
                link(i, i + 1, -1)
        elif letter == "D":
            for i in range(l - 2):
                link(i, i + 1, -1)
            link(l - 3, l - 1, -1)
        else:
            # 1 - 3 - 4 - 5 - 6 (- 7 - 8), with 2 hanging off 4
            link(0, 2, -1)
            link(1, 3, -1)
            for i in range(2, l - 1):
                link(i, i + 1, -1)
    elif letter == "B":
        for i in range(l):
            G[i][i] = Fraction(2 if i < l - 1 else 1)
        for i in range(l - 1):
            link(i, i + 1, -1)
    elif letter == "C":
        for i in range(l):
            G[i][i] = Fraction(1 if i < l - 1 else 2)
        for i in range(l - 2):
            link(i, i + 1, Fraction(-1, 2))
        link(l - 2, l - 1, -1)
    elif letter == "F":
        for i, v in enumerate((2, 2, 1, 1)):
            G[i][i] = Fraction(v)
        link(0, 1, -1)
        link(1, 2, -1)
        link(2, 3, Fraction(-1, 2))
    elif letter == "G":
        G[0][0], G[1][1] = Fraction(1), Fraction(3)
        link(0, 1, Fraction(-3, 2))
    return G


def _check_type(letter: str, l: int) -> None:
    ok = {"A": l >= 1, "B": l >= 2, "C": l >= 3, "D": l >= 4,
          "E": l in (6, 7, 8), "F": l == 4, "G": l == 2}
    if letter not in ok:
        raise RootSystemError(f"unknown type {letter!r}; expected one of A, B, C, D, E, F, G")
    if not ok[letter]:
        raise RootSystemError(f"no simple type {letter}{l} (A_l l>=1, B_l l>=2, C_l l>=3, D_l l>=4, "
                              f"E6/E7/E8, F4, G2)")


@dataclass(frozen=True)
class RootSystem:
    type_letter: str
    rank: int
    positive_roots: tuple           # sorted by height, then reverse-lexicographically
    gram: tuple

    @property
    def name(self) -> str:
        return f"{self.type_letter}{self.rank}"

    @property
    def simple_roots(self) -> tuple:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @property
    def highest_root(self) -> tuple:
        return self.positive_roots[-1]

    def is_root(self, v) -> bool:
        return tuple(v) in self._root_set

    @property
    def _root_set(self) -> frozenset:
        return _ROOT_SETS[(self.type_letter, self.rank)]

    def stratum(self, k: int) -> tuple:
        return tuple(a for a in self.positive_roots if height(a) == k)

    def strata(self) -> list["HeightStratum"]:
        top = height(self.highest_root)
        return [HeightStratum(k, self.stratum(k)) for k in range(1, top + 1)]


@dataclass(frozen=True)
class HeightStratum:
    k: int
    roots: tuple


_ROOT_SETS: dict = {}


def height(a) -> int:
    return sum(a)


def add(a, b) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def build(type_letter: str, rank: int) -> RootSystem:
    letter = type_letter.upper()
    _check_type(letter, rank)
    G = _gram(letter, rank)
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for b in layer:
            for i in range(rank):
                # bottom of the a_i-string through b
                p, c = 0, list(b)
                while True:
                    c[i] -= 1
                    if tuple(c) in roots:
                        p += 1
                    else:
                        break
                pair = 2 * sum(b[j] * G[j][i] for j in range(rank)) / G[i][i]
                if p - pair > 0:
                    up = list(b)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    ordered = tuple(sorted(roots, key=lambda a: (height(a), tuple(-x for x in a))))
    _ROOT_SETS[(letter, rank)] = frozenset(roots)
    rs = RootSystem(letter, rank, ordered, tuple(tuple(r) for r in G))
    top = rs.highest_root
    if any(x > y for a in ordered for x, y in zip(a, top)):
        raise RootSystemError(f"{rs.name}: highest root does not dominate")   # pragma: no cover
    return rs


def parse_type(text: str) -> RootSystem:
    """``"E8"``, ``"B5"``, ``"a3"``."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise RootSystemError(f"cannot read a root system type from {text!r}")
    return build(text[0].upper(), int(text[1:]))


def format_root(a) -> str:
    parts = []
    for i, c in enumerate(a, 1):
        if c:
            parts.append(f"a{i}" if c == 1 else f"{c}a{i}")
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# the middle-height pair


def middle_height(rs: RootSystem) -> int:
    return height(rs.highest_root) // 2


def proposition1_pair(rs: RootSystem):
    """Least pair (a, b), a before b, of roots of height floor(ht(delta)/2) with a + b a root."""
    layer = rs.stratum(middle_height(rs))
    for a, b in combinations(layer, 2):
        if rs.is_root(add(a, b)):
            return a, b
    return None


def middle_pairs(rs: RootSystem) -> list:
    layer = rs.stratum(middle_height(rs))
    return [(a, b) for a, b in combinations(layer, 2) if rs.is_root(add(a, b))]


def delta_minus(rs: RootSystem, s: int | None) -> tuple:
    """delta - a_s (s 1-based), or delta itself for s None."""
    d = list(rs.highest_root)
    if s is not None:
        d[s - 1] -= 1
    return tuple(d)


# The sum identity the pair search is expected to hit, as the index s of
# delta - a_s (None: the pair sums to delta itself).
def expected_sum_index(rs: RootSystem):
    l, t = rs.rank, rs.type_letter
    if t == "A":
        return None if l % 2 == 0 else l
    if t == "E":
        return {6: 2, 7: 1, 8: 8}[l]
    return {"B": 2, "C": 1, "D": 2, "F": 1}.get(t)


def pair_with_sum(rs: RootSystem, target) -> tuple | None:
    target = tuple(target)
    for a, b in middle_pairs(rs):
        if add(a, b) == target:
            return a, b
    return None


def written_pair(rs: RootSystem):
    """The explicit pair of the classical argument, where one is written out; None otherwise."""
    l, t = rs.rank, rs.type_letter
    e = lambda *cs: tuple(cs)   # noqa: E731
    if t == "A" and l >= 2:
        q = l // 2
        w1 = tuple(int(i < q) for i in range(l))
        w2 = tuple(int(q <= i < 2 * q) for i in range(l))
        return w1, w2
    if t == "B" and l >= 3:
        w1 = tuple(0 if i < 2 else (2 if i == l - 1 else 1) for i in range(l))
        w2 = tuple(int(i < l - 1) for i in range(l))
        return w1, w2
    table = {
        ("E", 6): (e(1, 0, 1, 1, 1, 1), e(0, 1, 1, 2, 1, 0)),
        ("E", 7): (e(1, 1, 2, 2, 1, 1, 0), e(0, 1, 1, 2, 2, 1, 1)),
        ("E", 8): (e(1, 2, 2, 3, 3, 2, 1, 0), e(1, 1, 2, 3, 2, 2, 2, 1)),
        ("F", 4): (e(1, 2, 2, 0), e(0, 1, 2, 2)),
    }
    return table.get((t, l))


# ---------------------------------------------------------------------------
# centralizer property on the root shadow


@dataclass(frozen=True)
class RootCentralizerReport:
    name: str
    nilindex: int                   # ht(delta): C^p n = 0 first at p = ht(delta)
    k: int                          # floor(nilindex / 2)
    abelian: tuple                  # ((p, C^p n abelian), ...) for 1 <= p < nilindex
    holds_P: bool
    variant: str                    # "P1", "P2" or "neither"
    witness: tuple | None           # roots (a, b) with a + b a root

    @property
    def is_P1(self) -> bool:
        return self.variant == "P1"


def _brackets_between(rs: RootSystem, lo_a: int, lo_b: int):
    """First pair (a, b), ht(a) >= lo_a, ht(b) >= lo_b, a != b, a + b a root."""
    A = [a for a in rs.positive_roots if height(a) >= lo_a]
    B = [b for b in rs.positive_roots if height(b) >= lo_b]
    for a in A:
        for b in B:
            if a != b and rs.is_root(add(a, b)):
                return a, b
    return None


def borel_nilradical_P_check(rs: RootSystem) -> RootCentralizerReport:
    nil = height(rs.highest_root)
    k = nil // 2
    abelian = tuple((p, _brackets_between(rs, p + 1, p + 1) is None) for p in range(1, nil))
    holds = all(ab == (p >= k) for p, ab in abelian)
    variant, witness = "neither", None
    if holds and k >= 1:
        pair = proposition1_pair(rs)
        if pair is not None:
            variant, witness = "P1", pair
        else:
            # W = C^{k-1} (heights >= k), V = C^k (heights >= k+1)
            pair = _brackets_between(rs, k, k + 1)
            if pair is not None:
                variant, witness = "P2", pair
    return RootCentralizerReport(rs.name, nil, k, abelian, holds, variant, witness)


# ---------------------------------------------------------------------------
# classical nilradicals as matrix algebras (second route, no root data used)


def _form(letter: str, l: int):
    """(N, J): the classical algebra is {X : X^T J + J X = 0}, J None for sl."""
    if letter == "A":
        return l + 1, None
    if letter in "BD":
        N = 2 * l + 1 if letter == "B" else 2 * l
        return N, [[int(i + j == N - 1) for j in range(N)] for i in range(N)]
    if letter == "C":
        N = 2 * l
        return N, [[(1 if i < l else -1) if i + j == N - 1 else 0 for j in range(N)] for i in range(N)]
    raise RootSystemError(f"no matrix model for type {letter}")


def matrix_nilradical(type_letter: str, rank: int):
    """Strictly upper triangular part of sl, so or sp in a split basis, as a LieAlgebra."""
    from .exactla import nullspace_basis
    from .liecore import LieAlgebra
    letter = type_letter.upper()
    _check_type(letter, rank)
    N, J = _form(letter, rank)
    slots = [(i, j) for i in range(N) for j in range(i + 1, N)]
    pos = {s: a for a, s in enumerate(slots)}
    if J is None:
        basis = [tuple(Fraction(int(a == b)) for b in range(len(slots))) for a in range(len(slots))]
    else:
        rows = []
        # (X^T J + J X)[r][c] = sum_s X[s][r] J[s][c] + J[r][s] X[s][c]
        for r in range(N):
            for c in range(r, N):
                row = [Fraction(0)] * len(slots)
                for s in range(N):
                    if J[s][c] and (s, r) in pos:
                        row[pos[(s, r)]] += J[s][c]
                    if J[r][s] and (s, c) in pos:
                        row[pos[(s, c)]] += J[r][s]
                if any(row):
                    rows.append(row)
        basis = nullspace_basis(rows, len(slots))
    # coordinates: each kernel vector is read off at one entry where the basis is a unit
    keys = []
    for a, v in enumerate(basis):
        t = next(t for t in range(len(slots)) if v[t] and all(not basis[b][t] for b in range(len(basis)) if b != a))
        keys.append(t)

    def as_mat(v):
        return {slots[t]: x for t, x in enumerate(v) if x}

    def mul(A, B):
        C: dict = {}
        for (a, b), x in A.items():
            for (c, d), y in B.items():
                if b == c:
                    C[(a, d)] = C.get((a, d), 0) + x * y
        return C

    mats = [as_mat(v) for v in basis]
    table = {}
    for a, b in combinations(range(len(basis)), 2):
        C = mul(mats[a], mats[b])
        for key, x in mul(mats[b], mats[a]).items():
            C[key] = C.get(key, 0) - x
        row = {}
        for c, t in enumerate(keys):
            x = C.get(slots[t], 0)
            if x:
                row[c] = x / basis[c][t]
        if row:
            table[(a, b)] = row
    return LieAlgebra(len(basis), table, name=f"n({letter}{rank})")
