"""The two summary tables of the (2m-1, 2, 1) and (2m-1, 2+q, 1) families.

Each row keeps the printed cells (dim formula, characteristic sequence and the
type pattern) and expands them for concrete parameters.  ``table_rows``
recomputes the same cells from the catalog and diffs them.  A printed type
cell that is wrong on its face is listed in ``TYPE_CORRECTIONS`` with the
corrected expansion; a diff is *explained* only when such an entry exists and
the recomputed value equals the corrected one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .liecore import characteristic_sequence, lower_central_series
from .models import ModelId, ModelRangeError, ModelUnavailable, make


def _twos(length: int, first: int, positions) -> tuple:
    """Type sequence of given length: entry 1 is ``first``, 2 at ``positions`` (1-based), else 1."""
    pos = set(positions)
    return tuple(first if p == 1 else (2 if p in pos else 1) for p in range(1, length + 1))


@dataclass(frozen=True)
class TableRow:
    table: int
    label: str                      # row name as a plain string
    family: str
    fixed: tuple                    # extra fixed parameters, e.g. (("k", 0),)
    dim_text: str
    charseq_text: str
    type_text: str
    dim: Callable                   # params -> int
    charseq: Callable               # params -> tuple
    type_literal: Callable          # params -> tuple, the cell read as typeset


@dataclass(frozen=True)
class TypeCorrection:
    corrected_text: str
    corrected: Callable             # params -> tuple
    reason: str


def _len(p):
    return 2 * p["m"] - 1


TABLE1 = [
    TableRow(1, "g^1_(m,0)", "g_m0_1k", (("k", 0),), "2m+2", "(2m-1,2,1)", "(3,2,1,..,1)",
             lambda p: 2 * p["m"] + 2, lambda p: (2 * p["m"] - 1, 2, 1),
             lambda p: _twos(_len(p), 3, [2])),
    TableRow(1, "g^2_(m,0)", "g_m0_1k", (("k", 1),), "2m+2", "(2m-1,2,1)", "(3,2,1,..,1)",
             lambda p: 2 * p["m"] + 2, lambda p: (2 * p["m"] - 1, 2, 1),
             lambda p: _twos(_len(p), 3, [2])),
    TableRow(1, "g^{2,1}_(m,t)", "g21", (), "2m+2", "(2m-1,2,1)", "(2,1,..,2 at 2t+1,2,1,..,1)",
             lambda p: 2 * p["m"] + 2, lambda p: (2 * p["m"] - 1, 2, 1),
             lambda p: _twos(_len(p), 2, [2 * p["t"] + 1, 2 * p["t"] + 2])),
    TableRow(1, "g^{2,2}_(m,1)", "g22", (), "2m+2", "(2m-1,2,1)", "(2,1,2,2,1,..,1)",
             lambda p: 2 * p["m"] + 2, lambda p: (2 * p["m"] - 1, 2, 1),
             lambda p: _twos(_len(p), 2, [3, 4])),
    TableRow(1, "g^{3,1}_(m,m-2)", "g31", (), "2m+2", "(2m-1,2,1)", "(2,1,..,2,2,1)",
             lambda p: 2 * p["m"] + 2, lambda p: (2 * p["m"] - 1, 2, 1),
             lambda p: _twos(_len(p), 2, [_len(p) - 2, _len(p) - 1])),
    TableRow(1, "g^5_(m,2)", "g5", (), "2m+2", "(2m-1,2,1)", "(2,1,1,1,2,2,1,..,1)",
             lambda p: 2 * p["m"] + 2, lambda p: (2 * p["m"] - 1, 2, 1),
             lambda p: _twos(_len(p), 2, [5, 6])),
]

TABLE2 = [
    TableRow(2, "g^{1,q}_(m,0)", "g_m0_1kq", (("k", 0),), "2m+2+q", "(2m-1,2+q,1)", "(3,2,..,2 at 2+q,1,..,1)",
             lambda p: 2 * p["m"] + 2 + p["q"], lambda p: (2 * p["m"] - 1, 2 + p["q"], 1),
             lambda p: _twos(_len(p), 3, range(2, 3 + p["q"]))),
    TableRow(2, "g^{2,q}_(m,0)", "g_m0_1kq", (("k", 1),), "2m+2+q", "(2m-1,2+q,1)", "(3,2,..,2 at 2+q,1,..,1)",
             lambda p: 2 * p["m"] + 2 + p["q"], lambda p: (2 * p["m"] - 1, 2 + p["q"], 1),
             lambda p: _twos(_len(p), 3, range(2, 3 + p["q"]))),
    TableRow(2, "g^{2,1,q}_(m,t)", "g21q", (), "2m+2+q", "(2m-1,2+q,1)",
             "(2,1,..,2 at 2t+1,2,..,2 at q+2t+1,1,..,1)",
             lambda p: 2 * p["m"] + 2 + p["q"], lambda p: (2 * p["m"] - 1, 2 + p["q"], 1),
             lambda p: _twos(_len(p), 2, range(2 * p["t"] + 1, p["q"] + 2 * p["t"] + 2))),
    TableRow(2, "g^{2,2,q}_(m,1)", "g22q", (), "2m+2+q", "(2m-1,2+q,1)", "(2,1,2,..,2 at 3+q,1,..,1)",
             lambda p: 2 * p["m"] + 2 + p["q"], lambda p: (2 * p["m"] - 1, 2 + p["q"], 1),
             lambda p: _twos(_len(p), 2, range(3, 4 + p["q"]))),
    TableRow(2, "g^{5,q}_(m,2)", "g5q", (), "2m+2+q", "(2m-1,2+q,1)", "(2,1,1,1,2,..,2 at 5+q,1,..,1)",
             lambda p: 2 * p["m"] + 2 + p["q"], lambda p: (2 * p["m"] - 1, 2 + p["q"], 1),
             lambda p: _twos(_len(p), 2, range(5, 6 + p["q"]))),
    TableRow(2, "g^{3,1,1}_(m,m-2)", "g311", (), "2m+3", "(2m-1,3,1)", "(2,1,..,1,2,2,2)",
             lambda p: 2 * p["m"] + 3, lambda p: (2 * p["m"] - 1, 3, 1),
             lambda p: _twos(_len(p), 2, [_len(p) - 2, _len(p) - 1, _len(p)])),
]

_SHORT = ("the printed run of 2s is one entry short: its entries sum to dim - 1, contradicting the "
          "dim column, and at q = 0 it does not reduce to the base row of the first table")

TYPE_CORRECTIONS = {
    "g^{2,1,q}_(m,t)": TypeCorrection(
        "(2,1,..,2 at 2t+1,2,..,2 at q+2t+2,1,..,1)",
        lambda p: _twos(_len(p), 2, range(2 * p["t"] + 1, p["q"] + 2 * p["t"] + 3)), _SHORT),
    "g^{2,2,q}_(m,1)": TypeCorrection(
        "(2,1,2,..,2 at 4+q,1,..,1)",
        lambda p: _twos(_len(p), 2, range(3, 5 + p["q"])), _SHORT),
    "g^{5,q}_(m,2)": TypeCorrection(
        "(2,1,1,1,2,..,2 at 6+q,1,..,1)",
        lambda p: _twos(_len(p), 2, range(5, 7 + p["q"])), _SHORT),
}


@dataclass
class CellResult:
    row: TableRow
    params: dict
    model: str
    expected: dict                  # column -> printed value (expanded)
    computed: dict                  # column -> recomputed value, or None if the model is unavailable
    diffs: list = field(default_factory=list)       # (column, printed, computed, explained)
    note: str = ""

    @property
    def ok(self) -> bool:
        return all(explained for *_, explained in self.diffs)


def _params_for(row: TableRow, m_values, q_values):
    for m in m_values:
        ts = range(1, m - 1) if row.family in ("g21", "g21q") else [None]
        qs = q_values if row.table == 2 and row.family != "g311" else [None]
        for t in ts:
            for q in qs:
                p = {"m": m, **dict(row.fixed)}
                if t is not None:
                    p["t"] = t
                if q is not None:
                    p["q"] = q
                yield p


def evaluate_row(row: TableRow, p: dict, seed: int = 0) -> CellResult | None:
    """Printed vs recomputed cells for one parameter choice; None when outside the printed range."""
    try:
        mid = ModelId.of(row.family, **p)
        g = make(mid)
    except ModelRangeError:
        return None
    except ModelUnavailable as exc:
        g, mid, note = None, ModelId.of(row.family, **p), str(exc)
    else:
        note = ""
    expected = {"dim": row.dim(p), "ch.s.": tuple(row.charseq(p)), "type": row.type_literal(p)}
    res = CellResult(row, p, str(mid), expected, {}, note=note)
    if g is None:
        res.computed = {k: None for k in expected}
        res.diffs = [(k, v, None, False) for k, v in expected.items()]
        return res
    res.computed = {"dim": g.dim, "ch.s.": tuple(characteristic_sequence(g, seed=seed).blocks),
                    "type": tuple(lower_central_series(g).type_sequence)}
    for col in ("dim", "ch.s.", "type"):
        if res.computed[col] != expected[col]:
            fix = TYPE_CORRECTIONS.get(row.label) if col == "type" else None
            explained = (fix is not None and fix.corrected(p) == res.computed[col]
                         and sum(fix.corrected(p)) == expected["dim"])
            res.diffs.append((col, expected[col], res.computed[col], explained))
    return res


def table_rows(which: int, m_values, q_values=(1, 2, 3), seed: int = 0) -> list[CellResult]:
    rows = TABLE1 if which == 1 else TABLE2 if which == 2 else None
    if rows is None:
        raise ValueError(f"no table {which}; choose 1 or 2")
    out = []
    for row in rows:
        for p in _params_for(row, m_values, q_values):
            r = evaluate_row(row, p, seed)
            if r is not None:
                out.append(r)
    return out
