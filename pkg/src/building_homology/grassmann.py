"""Canonical subspaces of F_q^n, their lattice operations, and Grassmannians.

A Subspace is identified with the unique RREF of its row space, so equality
and hashing are structural.  Grassmannians are enumerated by pivot-column
pattern with an odometer over the free entries, which is duplicate-free by
construction and deterministic.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from . import linalg
from .errors import AmbientMismatch
from .fields import Field


class Subspace:
    """A linear subspace of F_q^n held as the RREF basis of its row space."""

    __slots__ = ("field", "n", "basis", "pivots", "_hash", "_serial")

    def __init__(self, field: Field, n: int, basis: np.ndarray, pivots, _trusted=False):
        if not _trusted:
            basis, r, piv = linalg.rref(field, basis)
            basis = basis[:r]
            pivots = tuple(piv)
        self.field = field
        self.n = n
        self.basis = basis
        self.basis.setflags(write=False)
        self.pivots = tuple(pivots)
        self._hash = hash((field.q, n, self.basis.tobytes()))
        self._serial = None

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.field.q == other.field.q
            and self.n == other.n
            and self.basis.shape == other.basis.shape
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self):
        return self._hash

    @property
    def serial(self) -> str:
        """ "n:q:" + row-major digit string of the RREF basis."""
        if self._serial is None:
            self._serial = f"{self.n}:{self.field.q}:" + linalg.mat_to_digits(
                self.field, self.basis
            )
        return self._serial

    @property
    def sort_key(self):
        return (self.dim, self.serial)

    def __lt__(self, other):
        return self.sort_key < other.sort_key

    def __repr__(self):
        return f"Subspace({self.serial})"

    def contains_vector(self, v) -> bool:
        v = np.asarray(v, dtype=self.field.dtype)
        if self.dim == 0:
            return not v.any()
        c = v[list(self.pivots)]
        return np.array_equal(self.field.vec_mat(c, self.basis), v)

    def contains(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains_vector(row) for row in other.basis)

    def _check(self, other: "Subspace"):
        if self.field.q != other.field.q or self.n != other.n:
            raise AmbientMismatch(f"{self.serial} vs {other.serial}")

    def perp(self) -> "Subspace":
        """Orthogonal complement under the standard bilinear form."""
        K = linalg.kernel_basis(self.field, self.basis) if self.dim else np.eye(
            self.n, dtype=self.field.dtype
        )
        return span_of(self.field, K, n=self.n)

    def plus(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return span_of(self.field, np.concatenate([self.basis, other.basis]), n=self.n)

    def intersect(self, other: "Subspace") -> "Subspace":
        """Kernel of the stacked constraint system perp(U) | perp(U')."""
        self._check(other)
        constraints = np.concatenate([self.perp().basis, other.perp().basis])
        if constraints.shape[0] == 0:
            return full_space(self.field, self.n)
        return span_of(self.field, linalg.kernel_basis(self.field, constraints), n=self.n)

    __add__ = plus
    __and__ = intersect

    def __le__(self, other):
        return other.contains(self)


def span_of(field: Field, vectors, n: int | None = None) -> Subspace:
    """The subspace spanned by the given row vectors."""
    M = np.asarray(vectors, dtype=field.dtype)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    if n is None:
        n = M.shape[1]
    elif M.shape[1] != n and M.size:
        raise AmbientMismatch("vector length does not match ambient dimension")
    if M.shape[0] == 0:
        return zero_space(field, n)
    R, r, piv = linalg.rref(field, M)
    return Subspace(field, n, R[:r].copy(), tuple(piv), _trusted=True)


def zero_space(field: Field, n: int) -> Subspace:
    return Subspace(field, n, np.zeros((0, n), dtype=field.dtype), (), _trusted=True)


def full_space(field: Field, n: int) -> Subspace:
    return Subspace(field, n, np.eye(n, dtype=field.dtype), tuple(range(n)), _trusted=True)


def gauss_binomial(n: int, j: int, q: int) -> int:
    """Number of j-dimensional subspaces of F_q^n, as an exact big integer."""
    if j < 0 or j > n:
        return 0
    num = den = 1
    for i in range(j):
        num *= q ** (n - i) - 1
        den *= q ** (j - i) - 1
    return num // den


def enumerate_grassmannian(field: Field, n: int, j: int):
    """Yield all j-dimensional subspaces of F_q^n, each exactly once.

    Pivot patterns in lexicographic order; free entries run through an
    odometer (row-major, last cell fastest).
    """
    if j < 0 or j > n:
        return
    if j == 0:
        yield zero_space(field, n)
        return
    for pivots in itertools.combinations(range(n), j):
        pivot_set = set(pivots)
        free = [
            (i, c)
            for i in range(j)
            for c in range(pivots[i] + 1, n)
            if c not in pivot_set
        ]
        base = np.zeros((j, n), dtype=field.dtype)
        for i, p in enumerate(pivots):
            base[i, p] = 1
        for values in itertools.product(field.elements(), repeat=len(free)):
            M = base.copy()
            for (i, c), v in zip(free, values):
                M[i, c] = v
            yield Subspace(field, n, M, pivots, _trusted=True)


def superspaces(U: Subspace, d: int):
    """Yield all d-dimensional subspaces containing U, each exactly once.

    They correspond to (d - dim U)-subspaces of the quotient, coordinatized
    by U's non-pivot columns.
    """
    field, n = U.field, U.n
    k = U.dim
    if d < k or d > n:
        return
    if d == k:
        yield U
        return
    nonpiv = [c for c in range(n) if c not in set(U.pivots)]
    for S in enumerate_grassmannian(field, n - k, d - k):
        lifted = np.zeros((S.dim, n), dtype=field.dtype)
        lifted[:, nonpiv] = S.basis
        yield span_of(field, np.concatenate([U.basis, lifted]) if k else lifted, n=n)


def subspaces_of(U: Subspace, d: int):
    """Yield all d-dimensional subspaces of U, each exactly once."""
    field = U.field
    if d < 0 or d > U.dim:
        return
    for S in enumerate_grassmannian(field, U.dim, d):
        rows = field.mat_mul(S.basis, U.basis) if d else np.zeros(
            (0, U.n), dtype=field.dtype
        )
        yield span_of(field, rows, n=U.n)


@lru_cache(maxsize=None)
def grassmannian_list(field: Field, n: int, j: int):
    return tuple(enumerate_grassmannian(field, n, j))
