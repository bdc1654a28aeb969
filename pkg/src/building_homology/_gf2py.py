"""Pure numpy fallback for the bit-packed GF(2) kernels.

Same word layout and same results (including tie-breaking) as _gf2core,
selected at import time by building_homology.gf2 when the compiled
extension is unavailable.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 14


def rref_words(rows: np.ndarray, ncols: int):
    """In-place reduced row echelon form. Returns (rank, pivot columns)."""
    m = rows.shape[0]
    pivots: list[int] = []
    if m == 0 or ncols == 0:
        return 0, pivots
    r = 0
    for c in range(ncols):
        w, b = divmod(c, 64)
        mask = np.uint64(1) << np.uint64(b)
        hits = np.nonzero(rows[r:, w] & mask)[0]
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            rows[[piv, r]] = rows[[r, piv]]
        flip = (rows[:, w] & mask) != 0
        flip[r] = False
        rows[flip] ^= rows[r]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return r, pivots


def _unpack(words: np.ndarray, ncols: int) -> np.ndarray:
    return np.unpackbits(
        words.view(np.uint8).reshape(words.shape[0], -1),
        axis=1, count=ncols, bitorder="little",
    )


def min_block_weight(basis: np.ndarray, ncols: int, block_of_col: np.ndarray):
    """Exhaustive minimum block weight over nonzero GF(2) row combinations.

    Semantics identical to _gf2core.min_block_weight: first minimizer in
    Gray order wins ties.  Runs in chunks of vectorized mod-2 products.
    """
    d = basis.shape[0]
    if d <= 0 or d > 62:
        raise ValueError("row count out of range for exhaustive scan")
    B = _unpack(basis, ncols)
    starts = np.flatnonzero(np.r_[True, block_of_col[1:] != block_of_col[:-1]])
    nblocks = int(block_of_col[-1]) + 1 if ncols else 0
    shifts = np.arange(d, dtype=np.uint64)
    best = nblocks + 1
    best_mask = 0
    total = 1 << d
    for lo in range(1, total, _CHUNK):
        s = np.arange(lo, min(lo + _CHUNK, total), dtype=np.uint64)
        g = s ^ (s >> np.uint64(1))
        bits = ((g[:, None] >> shifts) & np.uint64(1)).astype(np.uint8)
        chains = (bits @ B) & 1  # row sums <= d < 256, no wraparound
        hit = np.add.reduceat(chains != 0, starts, axis=1) > 0
        w = hit.sum(axis=1)
        j = int(w.argmin())
        if int(w[j]) < best:
            best = int(w[j])
            best_mask = int(g[j])
    return best, best_mask, total - 1
