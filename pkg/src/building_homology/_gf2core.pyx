# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Bit-packed GF(2) kernels.

Matrices are rows of 64-bit words, bit c of word c >> 6 holding column c.
These are the two inner loops that dominate runtime: full row reduction,
and the exhaustive Gray-code scan for the minimum block weight over all
nonzero combinations of a set of rows.
"""

from libc.stdint cimport int32_t, int64_t, uint64_t
from libc.stdlib cimport free, malloc


cdef inline int _ctz64(uint64_t x) nogil:
    cdef int c = 0
    while not (x & 1):
        x >>= 1
        c += 1
    return c


def rref_words(uint64_t[:, ::1] rows, int ncols):
    """In-place reduced row echelon form. Returns (rank, pivot columns).

    Deterministic pivoting: first row carrying a bit in the current column.
    """
    cdef int m = rows.shape[0]
    cdef int nw = rows.shape[1]
    cdef int r = 0, c, i, j, w, piv
    cdef uint64_t mask, tmp
    pivots = []
    if m == 0 or ncols == 0:
        return 0, pivots
    for c in range(ncols):
        w = c >> 6
        mask = (<uint64_t>1) << (c & 63)
        piv = -1
        for i in range(r, m):
            if rows[i, w] & mask:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(nw):
                tmp = rows[piv, j]
                rows[piv, j] = rows[r, j]
                rows[r, j] = tmp
        # rows r..m-1 are zero left of column c, so words < w are untouched
        for i in range(m):
            if i != r and (rows[i, w] & mask):
                for j in range(w, nw):
                    rows[i, j] ^= rows[r, j]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return r, pivots


def min_block_weight(uint64_t[:, ::1] basis, int ncols, int32_t[::1] block_of_col):
    """Exhaustive minimum block weight over nonzero GF(2) row combinations.

    The weight of a combination is the number of distinct blocks (per
    block_of_col) containing at least one set bit.  Returns
    (min_weight, combination_mask, combinations_examined); the mask has bit
    j set iff basis row j participates in the minimizer (first minimizer in
    Gray order wins ties).
    """
    cdef int d = basis.shape[0]
    cdef int nw = basis.shape[1]
    cdef int nblocks = 0
    cdef int i
    for i in range(ncols):
        if block_of_col[i] + 1 > nblocks:
            nblocks = block_of_col[i] + 1
    if d <= 0 or d > 62:
        raise ValueError("row count out of range for exhaustive scan")
    cdef uint64_t total = (<uint64_t>1) << d
    cdef uint64_t* cur = <uint64_t*>malloc(nw * sizeof(uint64_t))
    cdef int64_t* stamp = <int64_t*>malloc(nblocks * sizeof(int64_t))
    if cur == NULL or stamp == NULL:
        if cur != NULL:
            free(cur)
        if stamp != NULL:
            free(stamp)
        raise MemoryError()
    cdef uint64_t s, x, best_mask = 0
    cdef int64_t mark = 0
    cdef int w2, b, col, blk, wt, jrow
    cdef int best = nblocks + 1
    with nogil:
        for w2 in range(nw):
            cur[w2] = 0
        for blk in range(nblocks):
            stamp[blk] = 0
        for s in range(1, total):
            jrow = _ctz64(s)
            for w2 in range(nw):
                cur[w2] ^= basis[jrow, w2]
            mark += 1
            wt = 0
            for w2 in range(nw):
                x = cur[w2]
                while x:
                    b = _ctz64(x)
                    col = (w2 << 6) + b
                    blk = block_of_col[col]
                    if stamp[blk] != mark:
                        stamp[blk] = mark
                        wt += 1
                    x &= x - 1
            if wt < best:
                best = wt
                best_mask = s ^ (s >> 1)
    free(cur)
    free(stamp)
    return best, best_mask, total - 1
