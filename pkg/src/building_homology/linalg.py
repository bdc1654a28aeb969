"""Dense linear algebra over F_q: RREF, rank, kernel, solving in a row span.

Matrices are 2-D numpy arrays of field elements (dtype from the field),
passed together with their Field.  GF(2) calls route through the
bit-packed kernels in building_homology.gf2; other fields use dense
elementwise elimination (byte-per-element for q <= 256).
"""

from __future__ import annotations

import numpy as np

from . import gf2
from .fields import Field


def as_matrix(field: Field, rows) -> np.ndarray:
    """Validate and convert rows of ints into a field matrix."""
    M = np.array(rows, dtype=np.int64)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    if M.size and (M.min() < 0 or M.max() >= field.q):
        raise ValueError("entry out of range for the field")
    return M.astype(field.dtype)


def _rref_generic(field: Field, M: np.ndarray):
    R = M.astype(field.dtype, copy=True)
    m, n = R.shape
    r = 0
    pivots: list[int] = []
    for c in range(n):
        col = R[r:, c]
        hits = np.nonzero(col)[0]
        if hits.size == 0:
            continue
        piv = r + int(hits[0])
        if piv != r:
            R[[piv, r]] = R[[r, piv]]
        pv = int(R[r, c])
        if pv != 1:
            R[r] = field.vmul(np.asarray(field.inv(pv), dtype=field.dtype), R[r])
        others = np.nonzero(R[:, c])[0]
        others = others[others != r]
        if others.size:
            R[others] = field.vsub(R[others], field.vmul(R[others, c][:, None], R[r][None, :]))
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, r, pivots


def rref(field: Field, M: np.ndarray):
    """Reduced row echelon form: (R, rank, pivot columns)."""
    if M.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    if 0 in M.shape:
        return M.astype(field.dtype, copy=True), 0, []
    if field.q == 2:
        return gf2.rref_bits(M)
    return _rref_generic(field, M)


def rank(field: Field, M: np.ndarray) -> int:
    return rref(field, M)[1]


def kernel_basis(field: Field, M: np.ndarray) -> np.ndarray:
    """Rows form a basis of the right kernel {v : M v = 0}."""
    m, n = M.shape
    if n == 0:
        return np.zeros((0, 0), dtype=field.dtype)
    R, r, pivots = rref(field, M)
    free = [c for c in range(n) if c not in set(pivots)]
    K = np.zeros((len(free), n), dtype=field.dtype)
    for row, f in enumerate(free):
        K[row, f] = 1
        for i, p in enumerate(pivots):
            K[row, p] = field.neg(int(R[i, f]))
    return K


def solve_in_span(field: Field, basis: np.ndarray, target: np.ndarray, pivots=None):
    """Coordinates c with c @ basis == target, or None if target is outside.

    basis rows must be linearly independent.  If the basis is in RREF, pass
    its pivot columns: coordinates are then read off directly.
    """
    target = np.asarray(target, dtype=field.dtype)
    if basis.shape[0] == 0:
        return np.zeros(0, dtype=field.dtype) if not target.any() else None
    if pivots is not None:
        c = target[list(pivots)]
        if np.array_equal(field.vec_mat(c, basis), target):
            return c
        return None
    # generic path: row-reduce [basis^T | target^T]
    aug = np.concatenate([basis.T, target.reshape(-1, 1)], axis=1)
    R, r, piv = rref(field, aug)
    if basis.shape[0] in piv:
        return None  # pivot in the target column -> inconsistent
    c = np.zeros(basis.shape[0], dtype=field.dtype)
    for i, p in enumerate(piv):
        c[p] = R[i, -1]
    if np.array_equal(field.vec_mat(c, basis), target):
        return c
    return None


def mat_to_digits(field: Field, M: np.ndarray) -> str:
    """Row-major digit string over the element encoding.

    Plain digit concatenation for q <= 10; comma-separated otherwise.
    """
    flat = M.reshape(-1)
    if field.q <= 10:
        return "".join(str(int(x)) for x in flat)
    return ",".join(str(int(x)) for x in flat)


def mat_from_digits(field: Field, s: str, ncols: int) -> np.ndarray:
    entries = [int(ch) for ch in s] if field.q <= 10 else (
        [int(t) for t in s.split(",")] if s else []
    )
    if ncols == 0:
        return np.zeros((0, 0), dtype=field.dtype)
    if len(entries) % ncols:
        raise ValueError("digit string length is not a multiple of ncols")
    return as_matrix(field, np.array(entries, dtype=np.int64).reshape(-1, ncols))
