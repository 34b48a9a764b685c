"""Pure-Python integer row reduction.

Fraction-free Gauss-Jordan elimination on lists of Python ints.  Every row
is kept primitive (content 1) with a positive pivot, so the echelon form is
canonical: dividing each returned row by its pivot entry gives the unique
rational reduced row echelon form.
"""

from math import gcd

BACKEND = "python"


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    if g > 1:
        row = [x // g for x in row]
    return row


def echelon(rows, ncols, reduced=True):
    """Row-reduce an integer matrix.

    Returns ``(rows, pivots)``: the nonzero echelon rows (primitive, positive
    pivot) and their pivot columns.  With ``reduced`` each pivot column is zero
    outside its own row.
    """
    work = [list(r) for r in rows if any(r)]
    pivots = []
    rank = 0
    nrows = len(work)
    for c in range(ncols):
        if rank == nrows:
            break
        best = -1
        for i in range(rank, nrows):
            v = work[i][c]
            if v and (best < 0 or abs(v) < abs(work[best][c])):
                best = i
                if abs(v) == 1:
                    break
        if best < 0:
            continue
        work[rank], work[best] = work[best], work[rank]
        prow = _primitive(work[rank])
        if prow[c] < 0:
            prow = [-x for x in prow]
        work[rank] = prow
        pv = prow[c]
        start = 0 if reduced else rank + 1
        for i in range(start, nrows):
            if i == rank:
                continue
            row = work[i]
            a = row[c]
            if not a:
                continue
            g = gcd(a, pv)
            fa, fp = a // g, pv // g
            lo = 0 if i < rank else c
            new = row[:lo] + [fp * row[j] - fa * prow[j] for j in range(lo, ncols)]
            work[i] = _primitive(new)
        pivots.append(c)
        rank += 1
    return work[:rank], pivots


def rank(rows, ncols):
    return len(echelon(rows, ncols, reduced=False)[1])
