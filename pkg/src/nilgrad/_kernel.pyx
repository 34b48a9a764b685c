# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled integer row reduction (int64 with overflow detection).

Same contract as ``_kernel_py.echelon``.  Any intermediate value leaving the
int64 range raises ``OverflowError``; the dispatcher in ``kernel`` then
retries the matrix with the arbitrary-precision Python path.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport int64_t

cdef extern from *:
    """
    static inline int nilgrad_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int nilgrad_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    """
    int nilgrad_mul_ovf(long long a, long long b, long long *r) nogil
    int nilgrad_sub_ovf(long long a, long long b, long long *r) nogil

BACKEND = "cython"

# INT64_MIN cannot be negated; keep every entry strictly inside the range.
cdef long long LIMIT = 9223372036854775807


cdef inline long long _abs(long long x) nogil:
    return -x if x < 0 else x


cdef inline long long _gcd(long long a, long long b) nogil:
    a = _abs(a)
    b = _abs(b)
    while b:
        a, b = b, a % b
    return a


cdef int _make_primitive(long long *row, Py_ssize_t ncols) nogil:
    cdef long long g = 0
    cdef Py_ssize_t j
    for j in range(ncols):
        if row[j]:
            g = _gcd(g, row[j])
            if g == 1:
                return 0
    if g > 1:
        for j in range(ncols):
            row[j] = row[j] // g
    return 0


cdef int _reduce(long long *m, Py_ssize_t nrows, Py_ssize_t ncols,
                 bint reduced, Py_ssize_t *pivots, Py_ssize_t *rank_out) nogil:
    # Returns 1 on overflow, 0 on success.
    cdef Py_ssize_t rank = 0, c, i, j, best, lo
    cdef long long v, bv, pv, a, g, fa, fp, t1, t2, t3
    cdef long long *prow
    cdef long long *row
    for c in range(ncols):
        if rank == nrows:
            break
        best = -1
        bv = 0
        for i in range(rank, nrows):
            v = m[i * ncols + c]
            if v and (best < 0 or _abs(v) < bv):
                best = i
                bv = _abs(v)
                if bv == 1:
                    break
        if best < 0:
            continue
        if best != rank:
            for j in range(ncols):
                t1 = m[rank * ncols + j]
                m[rank * ncols + j] = m[best * ncols + j]
                m[best * ncols + j] = t1
        prow = m + rank * ncols
        _make_primitive(prow, ncols)
        if prow[c] < 0:
            for j in range(ncols):
                prow[j] = -prow[j]
        pv = prow[c]
        for i in range(0 if reduced else rank + 1, nrows):
            if i == rank:
                continue
            row = m + i * ncols
            a = row[c]
            if not a:
                continue
            g = _gcd(a, pv)
            fa = a // g
            fp = pv // g
            lo = 0 if i < rank else c
            for j in range(lo, ncols):
                if nilgrad_mul_ovf(fp, row[j], &t1):
                    return 1
                if nilgrad_mul_ovf(fa, prow[j], &t2):
                    return 1
                if nilgrad_sub_ovf(t1, t2, &t3):
                    return 1
                if t3 == -LIMIT - 1:
                    return 1
                row[j] = t3
            _make_primitive(row, ncols)
        pivots[rank] = c
        rank += 1
    rank_out[0] = rank
    return 0


def echelon(rows, Py_ssize_t ncols, bint reduced=True):
    """int64 fraction-free Gauss-Jordan; raises OverflowError when out of range."""
    cdef list work = [r for r in rows if any(r)]
    cdef Py_ssize_t nrows = len(work)
    cdef Py_ssize_t i, j, rank = 0
    cdef long long *m
    cdef Py_ssize_t *pivots
    cdef int status
    if nrows == 0 or ncols == 0:
        return [], []
    m = <long long *> malloc(nrows * ncols * sizeof(long long))
    pivots = <Py_ssize_t *> malloc(ncols * sizeof(Py_ssize_t))
    if m == NULL or pivots == NULL:
        free(m)
        free(pivots)
        raise MemoryError()
    try:
        for i in range(nrows):
            r = work[i]
            for j in range(ncols):
                # raises OverflowError for values outside int64
                m[i * ncols + j] = r[j]
                if m[i * ncols + j] == -LIMIT - 1:
                    raise OverflowError("entry out of range")
        with nogil:
            status = _reduce(m, nrows, ncols, reduced, pivots, &rank)
        if status:
            raise OverflowError("int64 overflow during elimination")
        out = [[m[i * ncols + j] for j in range(ncols)] for i in range(rank)]
        piv = [pivots[i] for i in range(rank)]
        return out, piv
    finally:
        free(m)
        free(pivots)


def rank(rows, Py_ssize_t ncols):
    return len(echelon(rows, ncols, False)[1])
