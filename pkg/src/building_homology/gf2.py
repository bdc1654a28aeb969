"""Bit-packed GF(2) matrices: packing helpers and kernel backend selection.

The compiled extension (_gf2core) is preferred; the numpy fallback
(_gf2py) implements the same interface with identical outputs.  The active
backend is reported in BACKEND.
"""

from __future__ import annotations

import sys

import numpy as np

if sys.byteorder != "little":  # pragma: no cover
    raise ImportError("bit-packed GF(2) kernels assume a little-endian host")

try:
    from . import _gf2core as _impl

    BACKEND = "compiled"
except ImportError:  # pragma: no cover - depends on build environment
    from . import _gf2py as _impl

    BACKEND = "python"


def pack_rows(M: np.ndarray) -> np.ndarray:
    """Pack a 0/1 uint8 matrix into rows of uint64 words (column c -> bit c)."""
    M = np.ascontiguousarray(M, dtype=np.uint8)
    m, n = M.shape
    nbytes = (n + 7) // 8
    nwords = max(1, (nbytes + 7) // 8)
    packed = np.zeros((m, nwords * 8), dtype=np.uint8)
    if n:
        packed[:, :nbytes] = np.packbits(M, axis=1, bitorder="little")
    return packed.view(np.uint64)


def unpack_rows(W: np.ndarray, ncols: int) -> np.ndarray:
    """Inverse of pack_rows."""
    W = np.ascontiguousarray(W)
    return np.unpackbits(
        W.view(np.uint8).reshape(W.shape[0], -1),
        axis=1, count=ncols, bitorder="little",
    )


def rref_bits(M: np.ndarray):
    """RREF of a 0/1 matrix via the packed kernel: (R, rank, pivots)."""
    m, n = M.shape
    if m == 0 or n == 0:
        return M.copy(), 0, []
    W = pack_rows(M)
    rank, pivots = _impl.rref_words(W, n)
    return unpack_rows(W, n), rank, list(pivots)


def min_block_weight(rows01: np.ndarray, block_of_col: np.ndarray):
    """Exhaustive min block weight over nonzero combinations of 0/1 rows.

    Returns (weight, combination_mask, combinations_examined).
    """
    d, n = rows01.shape
    W = pack_rows(rows01)
    blocks = np.ascontiguousarray(block_of_col, dtype=np.int32)
    return _impl.min_block_weight(W, n, blocks)
