"""Maurer-Cartan presentations and their conversion to structure constants.

A presentation lists, for each target index k, terms ``(i, j, a)`` meaning
``d w_k = sum a w_i ^ w_j``.  The repository-wide sign convention is the
positive one: that term is read as ``[X_i, X_j] = a X_k + ...``.  Indices in
a presentation are 1-based and may skip values (some algebras are written
over bases such as {w_1, .., w_{2m-1}, w_{2m+1}}); ``labels`` keeps the
printed indices in order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .exactla import as_fraction
from .liecore import LieAlgebra


@dataclass(frozen=True)
class MaurerCartanForm:
    indices: tuple          # printed 1-based indices, in basis order
    terms: tuple            # ((k, ((i, j, a), ...)), ...) sorted by position of k

    @classmethod
    def build(cls, indices: Sequence[int], terms: Mapping[int, Sequence]) -> "MaurerCartanForm":
        idx = tuple(int(i) for i in indices)
        if len(set(idx)) != len(idx):
            raise ValueError("repeated basis index")
        known = set(idx)
        acc: dict = {}
        for k, lst in terms.items():
            if k not in known:
                raise ValueError(f"d w_{k}: index not in basis")
            row = acc.setdefault(k, {})
            for i, j, a in lst:
                if i not in known or j not in known:
                    raise ValueError(f"d w_{k}: term w_{i}^w_{j} outside basis")
                a = as_fraction(a)
                if i == j or not a:
                    continue
                if i > j:
                    i, j, a = j, i, -a
                row[(i, j)] = row.get((i, j), Fraction(0)) + a
        pos = {k: n for n, k in enumerate(idx)}
        packed = tuple(
            (k, tuple((i, j, a) for (i, j), a in sorted(row.items(), key=lambda t: (pos[t[0][0]], pos[t[0][1]])) if a))
            for k, row in sorted(acc.items(), key=lambda t: pos[t[0]]))
        return cls(idx, tuple((k, t) for k, t in packed if t))

    @property
    def dim(self) -> int:
        return len(self.indices)

    def as_dict(self) -> dict:
        return {k: list(t) for k, t in self.terms}


def mc_to_lie(f: MaurerCartanForm, name: str | None = None, degrees=None) -> LieAlgebra:
    pos = {k: n for n, k in enumerate(f.indices)}
    table: dict = {}
    for k, terms in f.terms:
        for i, j, a in terms:
            a_i, a_j = pos[i], pos[j]
            if a_i > a_j:
                a_i, a_j, a = a_j, a_i, -a
            table.setdefault((a_i, a_j), {})[pos[k]] = a
    labels = [f"X{k}" for k in f.indices]
    return LieAlgebra(f.dim, table, labels, degrees, name)


def lie_to_mc(g: LieAlgebra) -> MaurerCartanForm:
    idx = _printed_indices(g)
    terms: dict = {}
    for i, j, k, c in g.structure_constants():
        terms.setdefault(idx[k], []).append((idx[i], idx[j], c))
    return MaurerCartanForm.build(idx, terms)


def _printed_indices(g: LieAlgebra) -> list[int]:
    out = []
    for n, lab in enumerate(g.labels):
        if lab.startswith("X") and lab[1:].isdigit():
            out.append(int(lab[1:]))
        else:
            out.append(n + 1)
    if len(set(out)) != len(out):
        out = list(range(1, g.dim + 1))
    return out


def mc_convert(obj, name: str | None = None):
    """Presentation -> algebra, or algebra -> presentation."""
    if isinstance(obj, MaurerCartanForm):
        return mc_to_lie(obj, name)
    if isinstance(obj, LieAlgebra):
        return lie_to_mc(obj)
    raise TypeError(f"cannot convert {type(obj).__name__}")


def d_squared(f: MaurerCartanForm) -> dict:
    """d(d w_k) for every k as a map {(i, j, l): coeff} on w_i^w_j^w_l, i<j<l positions.

    Zero for every k exactly when the bracket satisfies Jacobi.
    """
    pos = {k: n for n, k in enumerate(f.indices)}
    d = {k: t for k, t in f.terms}
    out = {}
    for k, terms in f.terms:
        acc: dict = {}
        for i, j, a in terms:
            # d(w_i ^ w_j) = dw_i ^ w_j - w_i ^ dw_j
            for p, q, b in d.get(i, ()):
                _add3(acc, (pos[p], pos[q], pos[j]), a * b)
            for p, q, b in d.get(j, ()):
                _add3(acc, (pos[i], pos[p], pos[q]), -a * b)
        acc = {key: v for key, v in acc.items() if v}
        if acc:
            out[k] = acc
    return out


def _add3(acc, triple, coeff):
    a, b, c = triple
    if a == b or b == c or a == c:
        return
    # sort with sign of the permutation
    arr = [a, b, c]
    sign = 1
    for x in range(3):
        for y in range(2 - x):
            if arr[y] > arr[y + 1]:
                arr[y], arr[y + 1] = arr[y + 1], arr[y]
                sign = -sign
    key = tuple(arr)
    acc[key] = acc.get(key, 0) + sign * coeff
