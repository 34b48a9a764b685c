import pytest

from nilgrad.tables import TABLE1, TABLE2, TYPE_CORRECTIONS, _twos, evaluate_row, table_rows


def test_twos():
    assert _twos(7, 3, [2]) == (3, 2, 1, 1, 1, 1, 1)
    assert _twos(5, 2, range(3, 5)) == (2, 1, 2, 2, 1)


def test_table1_rows_match():
    rows = table_rows(1, range(4, 6))
    assert rows and all(r.ok and not r.diffs for r in rows)


@pytest.mark.parametrize("label", sorted(TYPE_CORRECTIONS))
def test_corrections_fix_the_sum(label):
    row = next(r for r in TABLE2 if r.label == label)
    p = {"m": 5, "q": 2, **dict(row.fixed)}
    if row.family == "g21q":
        p["t"] = 1
    fix = TYPE_CORRECTIONS[label]
    assert sum(row.type_literal(p)) == row.dim(p) - 1
    assert sum(fix.corrected(p)) == row.dim(p)


def test_table2_corrected_cells_are_explained():
    res = [r for r in table_rows(2, [4], [1]) if r.diffs]
    assert res and all(r.ok for r in res)
    assert {r.row.label for r in res} <= set(TYPE_CORRECTIONS)


def test_unavailable_cell_is_unexplained():
    row = next(r for r in TABLE2 if r.family == "g5q")
    res = evaluate_row(row, {"m": 4, "q": 2})
    assert res.computed["dim"] is None and not res.ok and res.note


def test_out_of_range_is_skipped():
    row = next(r for r in TABLE2 if r.family == "g21q")
    assert evaluate_row(row, {"m": 4, "t": 2, "q": 2}) is None


def test_unknown_table():
    with pytest.raises(ValueError):
        table_rows(3, [4])
