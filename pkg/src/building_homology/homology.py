"""Twisted chain complexes for ambient local coefficient systems.

A system assigns to each simplex a subspace of one fixed ambient space,
monotonically (faces get larger spaces), so every connecting map is the
identity in ambient coordinates.  Chain-group coordinates are indexed by
the RREF basis of each simplex's value space; boundary assembly is then
sign-and-copy plus a change to the face's local basis, which is a pivot
read-off.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

import numpy as np

from . import linalg
from .complexes import AbstractComplex, BuildingComplex, face
from .errors import AmbientMismatch, MonotonicityViolation
from .exterior import wedge_power_subspace
from .fields import Field
from .grassmann import Subspace, full_space


class AmbientLocalSystem:
    """simplex -> subspace of a fixed ambient F_q^D, monotone under faces."""

    def __init__(self, field: Field, ambient_dim: int, value_fn, empty_value=None,
                 min_vertex_dim: int | None = None, grade: int | None = None):
        self.field = field
        self.ambient_dim = ambient_dim
        self._value_fn = value_fn
        self.empty_value = (
            empty_value if empty_value is not None else full_space(field, ambient_dim)
        )
        self.min_vertex_dim = min_vertex_dim
        self.grade = grade
        self._cache: dict = {}

    def value(self, simplex) -> Subspace:
        if len(simplex) == 0:
            return self.empty_value
        V = self._cache.get(simplex)
        if V is None:
            V = self._value_fn(simplex)
            self._cache[simplex] = V
        return V


def untwisted_system(field: Field) -> AmbientLocalSystem:
    """Constant coefficients F_q (ambient dimension 1)."""
    one = full_space(field, 1)
    return AmbientLocalSystem(field, 1, lambda s: one, one)


@lru_cache(maxsize=None)
def lusztig_system(field: Field, n: int, k: int) -> AmbientLocalSystem:
    """k-th exterior power of the smallest-subspace system on flags.

    value(U_1 < ... < U_l) is the k-th exterior power of U_1 inside that of
    the ambient space; the empty simplex gets the full exterior power.
    """
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    D = comb(n, k)
    by_min: dict = {}

    def value(simplex):
        U = simplex[0]
        W = by_min.get(U)
        if W is None:
            W = wedge_power_subspace(U, k)
            by_min[U] = W
        return W

    return AmbientLocalSystem(field, D, value, full_space(field, D),
                              min_vertex_dim=k, grade=k)


def simplex_intersection_system(field: Field, subspaces):
    """Full simplex on the index set with values cap of the chosen spaces.

    Returns (complex, system); the empty simplex's value is the whole
    ambient space.
    """
    subspaces = list(subspaces)
    if not subspaces:
        raise ValueError("need at least one subspace")
    D = subspaces[0].n
    for W in subspaces:
        if W.n != D or W.field.q != field.q:
            raise AmbientMismatch("subspaces must share one ambient space")
    r = len(subspaces)
    delta = AbstractComplex([tuple(range(r))])

    def value(simplex):
        out = subspaces[simplex[0]]
        for i in simplex[1:]:
            out = out.intersect(subspaces[i])
        return out

    return delta, AmbientLocalSystem(field, D, value, full_space(field, D))


class ChainBasis:
    """Ordered pruned simplices of one degree with their local value spaces."""

    __slots__ = ("simplices", "values", "offsets", "index", "dim")

    def __init__(self, simplices, values):
        self.simplices = simplices
        self.values = values
        offs = [0]
        for V in values:
            offs.append(offs[-1] + V.dim)
        self.offsets = offs
        self.index = {s: i for i, s in enumerate(simplices)}
        self.dim = offs[-1]

    def block(self, i: int) -> slice:
        return slice(self.offsets[i], self.offsets[i + 1])

    def block_of_col(self) -> np.ndarray:
        out = np.empty(self.dim, dtype=np.int32)
        for i in range(len(self.simplices)):
            out[self.offsets[i]: self.offsets[i + 1]] = i
        return out


class TwistedComplex:
    """Chain complex of (complex, system); all matrices and ranks cached."""

    def __init__(self, X, F: AmbientLocalSystem, reduced: bool = True):
        self.X = X
        self.F = F
        self.field = F.field
        self.reduced = reduced
        self._bases: dict[int, ChainBasis] = {}
        self._boundaries: dict[int, np.ndarray] = {}
        self._ranks: dict[int, int] = {}
        self._kernels: dict[int, np.ndarray] = {}

    def basis(self, i: int) -> ChainBasis:
        cb = self._bases.get(i)
        if cb is None:
            hint = self.F.min_vertex_dim
            if hint is not None and isinstance(self.X, BuildingComplex):
                sims = self.X.simplices(i, min_dim=hint)
            else:
                sims = self.X.simplices(i)
            kept, values = [], []
            for s in sims:
                V = self.F.value(s)
                if V.dim > 0:
                    kept.append(s)
                    values.append(V)
            cb = ChainBasis(kept, values)
            self._bases[i] = cb
        return cb

    def _face_coords(self, target: Subspace, B: np.ndarray) -> np.ndarray:
        """Rows of B re-expressed in the face's RREF basis."""
        C = B[:, list(target.pivots)]
        if not np.array_equal(self.field.mat_mul(C, target.basis), B):
            raise MonotonicityViolation("coefficient escaped the face's value space")
        return C

    def boundary(self, i: int) -> np.ndarray:
        """Matrix of the i-th boundary map, C_i -> C_{i-1}."""
        M = self._boundaries.get(i)
        if M is not None:
            return M
        field = self.field
        cb = self.basis(i)
        if i > 0:
            rb = self.basis(i - 1)
            nrows = rb.dim
        else:
            nrows = self.F.empty_value.dim if self.reduced else 0
        M = np.zeros((nrows, cb.dim), dtype=field.dtype)
        for ci, s in enumerate(cb.simplices):
            B = cb.values[ci].basis
            col = cb.block(ci)
            for j in range(1, len(s) + 1):
                if i == 0:
                    if not self.reduced:
                        continue
                    target = self.F.empty_value
                    rows = slice(0, nrows)
                else:
                    tau = face(s, j)
                    ti = rb.index.get(tau)
                    if ti is None:
                        raise MonotonicityViolation("face missing from chain basis")
                    target = rb.values[ti]
                    rows = rb.block(ti)
                C = self._face_coords(target, B)
                if j % 2 == 0:
                    C = field.vneg(C)
                M[rows, col] = C.T
        self._boundaries[i] = M
        return M

    def boundary_rank(self, i: int) -> int:
        r = self._ranks.get(i)
        if r is None:
            if self.basis(i).dim == 0:
                r = 0
            else:
                r = linalg.rank(self.field, self.boundary(i))
            self._ranks[i] = r
        return r

    def homology_dim(self, i: int) -> int:
        cb = self.basis(i)
        if cb.dim == 0:
            return 0
        up = self.boundary_rank(i + 1) if self.basis(i + 1).dim else 0
        return cb.dim - self.boundary_rank(i) - up

    def cycle_space(self, i: int) -> np.ndarray:
        """Rows form a basis of ker of the i-th boundary, chain coordinates."""
        K = self._kernels.get(i)
        if K is None:
            cb = self.basis(i)
            if cb.dim == 0:
                K = np.zeros((0, 0), dtype=self.field.dtype)
            else:
                K = linalg.kernel_basis(self.field, self.boundary(i))
            self._kernels[i] = K
        return K

    def check_boundary_square(self, i: int) -> bool:
        """True iff the composite of consecutive boundaries is zero."""
        if self.basis(i + 1).dim == 0 or self.basis(i).dim == 0:
            return True
        prod = self.field.mat_mul(self.boundary(i), self.boundary(i + 1))
        return not prod.any()


@lru_cache(maxsize=None)
def twisted_complex(X, F: AmbientLocalSystem, reduced: bool = True) -> TwistedComplex:
    return TwistedComplex(X, F, reduced)


def boundary_matrix(X, F: AmbientLocalSystem, i: int, reduced: bool = True):
    return twisted_complex(X, F, reduced).boundary(i)


def homology_dim(X, F: AmbientLocalSystem, i: int, reduced: bool = True) -> int:
    return twisted_complex(X, F, reduced).homology_dim(i)


class TwistedChain:
    """Sparse twisted chain: simplex -> nonzero ambient coefficient vector.

    Coefficients are validated to lie in the system's value space of their
    simplex at construction time.
    """

    __slots__ = ("X", "system", "degree", "data")

    def __init__(self, X, system: AmbientLocalSystem, degree: int, data):
        field = system.field
        clean = {}
        for s, vec in data.items():
            vec = np.asarray(vec, dtype=field.dtype)
            if not vec.any():
                continue
            V = system.value(s)
            if linalg.solve_in_span(field, V.basis, vec, pivots=V.pivots) is None:
                raise ValueError("coefficient outside its simplex's value space")
            clean[s] = vec
        self.X = X
        self.system = system
        self.degree = degree
        self.data = clean

    @property
    def support(self):
        return sorted(self.data)

    def coefficient(self, simplex) -> np.ndarray:
        return self.data.get(
            simplex, np.zeros(self.system.ambient_dim, dtype=self.system.field.dtype)
        )

    def __len__(self):
        return len(self.data)


def verify_cycle(chain: TwistedChain) -> bool:
    """True iff the boundary of the chain vanishes (reduced in degree 0)."""
    field = chain.system.field
    acc: dict = {}
    for s, vec in chain.data.items():
        for j in range(1, len(s) + 1):
            tau = face(s, j)
            cur = acc.get(tau)
            term = vec if j % 2 == 1 else field.vneg(vec)
            acc[tau] = term if cur is None else field.vadd(cur, term)
    return all(not v.any() for v in acc.values())


def chain_vector(chain: TwistedChain, cb: ChainBasis) -> np.ndarray:
    """Coordinates of the chain with respect to a degree's chain basis."""
    field = chain.system.field
    out = np.zeros(cb.dim, dtype=field.dtype)
    for s, vec in chain.data.items():
        i = cb.index[s]
        V = cb.values[i]
        coords = linalg.solve_in_span(field, V.basis, vec, pivots=V.pivots)
        if coords is None:
            raise MonotonicityViolation("chain coefficient outside value space")
        out[cb.block(i)] = coords
    return out


def chain_from_vector(tc: TwistedComplex, i: int, vec: np.ndarray) -> TwistedChain:
    """Inverse of chain_vector for a given twisted complex degree."""
    cb = tc.basis(i)
    field = tc.field
    data = {}
    for idx, s in enumerate(cb.simplices):
        coords = vec[cb.block(idx)]
        if coords.any():
            data[s] = field.vec_mat(coords, cb.values[idx].basis)
    return TwistedChain(tc.X, tc.F, i, data)


def chain_family_rank(X, F: AmbientLocalSystem, i: int, chains) -> int:
    """Rank of a family of degree-i chains inside the chain group."""
    tc = twisted_complex(X, F)
    cb = tc.basis(i)
    if not chains:
        return 0
    M = np.stack([chain_vector(c, cb) for c in chains])
    return linalg.rank(F.field, M)
