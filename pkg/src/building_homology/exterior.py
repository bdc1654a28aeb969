"""Exterior algebra of F_q^n in coordinates.

Grade-j vectors are stored densely over the lexicographically ordered
j-subsets of {0,...,n-1}.  The induced bilinear form makes the subset basis
orthonormal, so the grade form is a plain coordinate dot product and the
star operator is the signed complementation of index sets.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb

import numpy as np

from .errors import AmbientMismatch, DegenerateInput, GradeOverflow
from .fields import Field
from .grassmann import Subspace, span_of, zero_space
from . import linalg


@lru_cache(maxsize=None)
def index_subsets(n: int, j: int):
    """Lexicographically ordered j-subsets of range(n)."""
    return tuple(itertools.combinations(range(n), j))


@lru_cache(maxsize=None)
def subset_position(n: int, j: int):
    return {s: i for i, s in enumerate(index_subsets(n, j))}


def merge_sign(I, J):
    """Sorted merge of disjoint index tuples with the shuffle sign.

    Returns (sign, merged) with sign = (-1)^#{(i,j) in I x J : i > j}.
    """
    inv = 0
    for i in I:
        for j in J:
            if i > j:
                inv += 1
    merged = tuple(sorted(I + J))
    return (-1) ** inv, merged


def complement_sign(n: int, I) -> int:
    """Sign of the shuffle permutation (I, then its complement)."""
    comp = [j for j in range(n) if j not in set(I)]
    inv = sum(1 for i in I for j in comp if i > j)
    return (-1) ** inv


class WedgeVector:
    """An element of the j-th exterior power of F_q^n."""

    __slots__ = ("field", "n", "grade", "coords")

    def __init__(self, field: Field, n: int, grade: int, coords=None):
        if not 0 <= grade <= n:
            raise GradeOverflow(f"grade {grade} outside 0..{n}")
        self.field = field
        self.n = n
        self.grade = grade
        if coords is None:
            coords = np.zeros(comb(n, grade), dtype=field.dtype)
        else:
            coords = np.asarray(coords, dtype=field.dtype)
            if coords.shape != (comb(n, grade),):
                raise ValueError("coordinate vector has the wrong length")
        self.coords = coords

    def _check(self, other: "WedgeVector"):
        if self.field.q != other.field.q or self.n != other.n:
            raise AmbientMismatch("wedge vectors over different ambient spaces")

    def __eq__(self, other):
        return (
            isinstance(other, WedgeVector)
            and self.field.q == other.field.q
            and (self.n, self.grade) == (other.n, other.grade)
            and np.array_equal(self.coords, other.coords)
        )

    def __hash__(self):
        return hash((self.field.q, self.n, self.grade, self.coords.tobytes()))

    def is_zero(self) -> bool:
        return not self.coords.any()

    def __add__(self, other):
        self._check(other)
        if self.grade != other.grade:
            raise GradeOverflow("cannot add different grades")
        return WedgeVector(self.field, self.n, self.grade,
                           self.field.vadd(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        if self.grade != other.grade:
            raise GradeOverflow("cannot subtract different grades")
        return WedgeVector(self.field, self.n, self.grade,
                           self.field.vsub(self.coords, other.coords))

    def __neg__(self):
        return WedgeVector(self.field, self.n, self.grade, self.field.vneg(self.coords))

    def scale(self, s: int) -> "WedgeVector":
        return WedgeVector(self.field, self.n, self.grade,
                           self.field.vmul(np.asarray(s, dtype=self.field.dtype), self.coords))

    def __repr__(self):
        terms = []
        for s, c in zip(index_subsets(self.n, self.grade), self.coords):
            if c:
                terms.append(f"{int(c)}*e{''.join(str(i + 1) for i in s)}")
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> dict:
        """{"n":..., "grade":..., "coords": {"[i,j,...]": elem}} (1-indexed)."""
        coords = {}
        for s, c in zip(index_subsets(self.n, self.grade), self.coords):
            if c:
                coords["[" + ",".join(str(i + 1) for i in s) + "]"] = int(c)
        return {"n": self.n, "grade": self.grade, "coords": coords}


def wedge_from_json(field: Field, obj: dict) -> WedgeVector:
    n, grade = obj["n"], obj["grade"]
    out = WedgeVector(field, n, grade)
    coords = out.coords.copy()
    pos = subset_position(n, grade)
    for key, val in obj["coords"].items():
        idx = tuple(sorted(int(t) - 1 for t in key.strip("[]").split(",") if t))
        coords[pos[idx]] = val
    out.coords = coords
    return out


def basis_wedge(field: Field, n: int, subset) -> WedgeVector:
    """The basis vector e_S for a set of 0-indexed coordinates."""
    subset = tuple(sorted(subset))
    out = WedgeVector(field, n, len(subset))
    out.coords[subset_position(n, len(subset))[subset]] = 1
    return out


def from_vector(field: Field, v) -> WedgeVector:
    v = np.asarray(v, dtype=field.dtype)
    return WedgeVector(field, len(v), 1, v)


def top_form(field: Field, n: int) -> WedgeVector:
    """e_1 ^ ... ^ e_n."""
    return basis_wedge(field, n, range(n))


def wedge(a: WedgeVector, b: WedgeVector) -> WedgeVector:
    """Bilinear, associative, graded-anticommutative wedge product."""
    a._check(b)
    n = a.n
    if a.grade + b.grade > n:
        raise GradeOverflow(f"grades {a.grade}+{b.grade} exceed n={n}")
    field = a.field
    out = WedgeVector(field, n, a.grade + b.grade)
    pos = subset_position(n, a.grade + b.grade)
    asets = index_subsets(n, a.grade)
    bsets = index_subsets(n, b.grade)
    for ia in np.nonzero(a.coords)[0]:
        I = asets[ia]
        ca = int(a.coords[ia])
        for ib in np.nonzero(b.coords)[0]:
            J = bsets[ib]
            if set(I) & set(J):
                continue
            sign, merged = merge_sign(I, J)
            term = field.mul(ca, int(b.coords[ib]))
            if sign < 0:
                term = field.neg(term)
            k = pos[merged]
            out.coords[k] = field.add(int(out.coords[k]), term)
    return out


def wedge_rows(field: Field, rows) -> WedgeVector:
    """Wedge of several vectors (rows of a matrix), left to right."""
    rows = np.asarray(rows, dtype=field.dtype)
    if rows.ndim == 1:
        rows = rows.reshape(1, -1)
    n = rows.shape[1]
    out = basis_wedge(field, n, ())  # scalar 1 in grade 0
    for row in rows:
        out = wedge(out, from_vector(field, row))
    return out


def grade_form(a: WedgeVector, b: WedgeVector) -> int:
    """Induced symmetric bilinear form; the subset basis is orthonormal."""
    a._check(b)
    if a.grade != b.grade:
        raise GradeOverflow("grade form requires equal grades")
    field = a.field
    out = 0
    for ca, cb in zip(a.coords, b.coords):
        out = field.add(out, field.mul(int(ca), int(cb)))
    return out


def star(a: WedgeVector) -> WedgeVector:
    """Grade-reversing map with (star a) . b = e . (a ^ b) for all b."""
    field, n = a.field, a.n
    out = WedgeVector(field, n, n - a.grade)
    pos = subset_position(n, n - a.grade)
    sets = index_subsets(n, a.grade)
    for i in np.nonzero(a.coords)[0]:
        I = sets[i]
        comp = tuple(j for j in range(n) if j not in set(I))
        c = int(a.coords[i])
        if complement_sign(n, I) < 0:
            c = field.neg(c)
        out.coords[pos[comp]] = c
    return out


@lru_cache(maxsize=None)
def _wedge_basis_cached(U: Subspace, k: int):
    field = U.field
    if k > U.dim or k < 0:
        return ()
    return tuple(
        wedge_rows(field, U.basis[list(rows)])
        for rows in itertools.combinations(range(U.dim), k)
    )


def wedge_basis_of_subspace(U: Subspace, k: int):
    """Wedges of k-subsets of U's RREF basis rows, in ambient coordinates.

    Linearly independent; spans the k-th exterior power of U inside that of
    the ambient space.  Empty for k > dim U.
    """
    return list(_wedge_basis_cached(U, k))


def wedge_power_subspace(U: Subspace, k: int) -> Subspace:
    """The k-th exterior power of U as a canonical subspace of F_q^C(n,k)."""
    field = U.field
    D = comb(U.n, k)
    vecs = _wedge_basis_cached(U, k)
    if not vecs:
        return zero_space(field, D)
    return span_of(field, np.stack([w.coords for w in vecs]), n=D)


def unit_perp(field: Field, vectors) -> np.ndarray:
    """The unique w orthogonal to all inputs with last coordinate 1.

    Requires the n-1 inputs to be independent with e_n outside their span;
    raises DegenerateInput otherwise.
    """
    M = np.asarray(vectors, dtype=field.dtype)
    if M.ndim == 1:
        M = M.reshape(1, -1)
    n = M.shape[1]
    if M.shape[0] != n - 1:
        raise DegenerateInput(f"expected {n - 1} vectors, got {M.shape[0]}")
    last = np.zeros((1, n), dtype=field.dtype)
    last[0, n - 1] = 1
    A = np.concatenate([M, last])
    rhs = np.zeros((n, 1), dtype=field.dtype)
    rhs[n - 1, 0] = 1
    R, r, piv = linalg.rref(field, np.concatenate([A, rhs], axis=1))
    if r < n or n in piv:
        raise DegenerateInput("inputs dependent or e_n inside their span")
    return R[:, n].copy()
