"""Simplicial complexes: the subspace flag complex, apartments, the coned
octahedron, barycentric subdivision, and the simplicial map into the
building attached to a tail sequence.

Simplices are tuples of vertices listed in the complex's vertex order; the
j-th face (j = 1-indexed) drops the j-th vertex.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .errors import DegenerateFrame, NotATailSequence
from .fields import Field
from .grassmann import Subspace, grassmannian_list, span_of, superspaces


class FlagSimplex(tuple):
    """Strictly nested chain of proper nonzero subspaces, increasing dim."""

    def __new__(cls, chain):
        chain = tuple(chain)
        for U in chain:
            if not 0 < U.dim < U.n:
                raise ValueError("flag entries must be proper nonzero subspaces")
        for a, b in zip(chain, chain[1:]):
            if not (a.dim < b.dim and b.contains(a)):
                raise ValueError("chain is not strictly nested")
        return tuple.__new__(cls, chain)

    @property
    def dims(self):
        return tuple(U.dim for U in self)

    def serial(self) -> str:
        return "<".join(U.serial for U in self)


def face(simplex, j: int):
    """The j-th face (1-indexed, per the boundary-map convention)."""
    return simplex[: j - 1] + simplex[j:]


class AbstractComplex:
    """Finite abstract simplicial complex on totally ordered vertex tokens."""

    def __init__(self, maximal, key=None):
        self.key = key if key is not None else (lambda t: t)
        sims = {tuple(sorted(set(s), key=self.key)) for s in maximal}
        # normalize to an antichain of maximal simplices
        self.maximal = sorted(
            (s for s in sims if not any(s != t and set(s) <= set(t) for t in sims)),
            key=lambda s: tuple(self.key(t) for t in s),
        )
        self.dim = max((len(s) - 1 for s in self.maximal), default=-1)
        self._cache: dict[int, list] = {}

    def vertices(self):
        return [s[0] for s in self.simplices(0)]

    def simplices(self, k: int):
        """All k-simplices in vertex order, sorted, each exactly once."""
        if k == -1:
            return [()]
        if k < -1 or k > self.dim:
            return []
        if k not in self._cache:
            out = {
                c
                for m in self.maximal
                for c in itertools.combinations(m, k + 1)
            }
            self._cache[k] = sorted(
                out, key=lambda s: tuple(self.key(t) for t in s)
            )
        return self._cache[k]

    def f_vector(self):
        return [len(self.simplices(k)) for k in range(self.dim + 1)]

    def euler_characteristic_reduced(self) -> int:
        return sum((-1) ** k * len(self.simplices(k)) for k in range(self.dim + 1)) - 1


class BuildingComplex:
    """The order complex of proper nonzero subspaces of F_q^n.

    Simplices stream per degree and are cached; nothing is materialized
    across degrees.  min_dim drops simplices whose smallest subspace has
    dimension below it (the pruning used by exterior-power coefficients).
    """

    def __init__(self, field: Field, n: int):
        if n < 2:
            raise ValueError("building needs ambient dimension n >= 2")
        self.field = field
        self.n = n
        self._cache: dict[tuple[int, int], list] = {}

    @property
    def dim(self) -> int:
        return self.n - 2

    def grassmannian(self, d: int):
        return grassmannian_list(self.field, self.n, d)

    def simplices(self, i: int, min_dim: int = 1):
        """All i-simplices (flags of i+1 subspaces), each exactly once."""
        min_dim = max(1, min_dim)
        if i == -1:
            return [()]
        if i < -1 or i > self.dim:
            return []
        key = (i, min_dim)
        if key not in self._cache:
            out = []
            for dims in itertools.combinations(range(min_dim, self.n), i + 1):
                self._extend(out, (), dims)
            self._cache[key] = out
        return self._cache[key]

    def _extend(self, out, prefix, dims):
        if len(prefix) == len(dims):
            out.append(FlagSimplex(prefix))
            return
        d = dims[len(prefix)]
        if not prefix:
            for U in self.grassmannian(d):
                self._extend(out, (U,), dims)
        else:
            for U in superspaces(prefix[-1], d):
                self._extend(out, prefix + (U,), dims)

    def chambers(self):
        return self.simplices(self.dim)


def apartment(frame) -> AbstractComplex:
    """Subcomplex induced by all spans of subsets of a frame of n lines."""
    frame = tuple(frame)
    field = frame[0].field
    n = frame[0].n
    if len(frame) != n or len(set(frame)) != n or any(L.dim != 1 for L in frame):
        raise DegenerateFrame("need n distinct lines")
    gens = np.concatenate([L.basis for L in frame])
    if span_of(field, gens).dim != n:
        raise DegenerateFrame("lines do not span the ambient space")
    spans = {}
    for size in range(1, n):
        for I in itertools.combinations(range(n), size):
            spans[I] = span_of(field, gens[list(I)])
    maximal = []
    for perm in itertools.permutations(range(n)):
        chain = tuple(
            spans[tuple(sorted(perm[:j]))] for j in range(1, n)
        )
        maximal.append(chain)
    return AbstractComplex(maximal, key=lambda U: U.sort_key)


def coned_octahedron(n: int) -> AbstractComplex:
    """Join of n-1 point pairs, plus a cone over its codim-1 skeleton.

    Vertex tokens: ("a", i, 0|1) for 1 <= i <= n-1 and ("b",).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    maximal = []
    for eps in itertools.product((0, 1), repeat=n - 1):
        facet = tuple(("a", i + 1, e) for i, e in enumerate(eps))
        maximal.append(facet)
        for j in range(n - 1):
            maximal.append(facet[:j] + facet[j + 1 :] + (("b",),))
    return AbstractComplex(maximal)


def octahedral_sphere(n: int) -> AbstractComplex:
    """The join of the n-1 point pairs alone (an (n-2)-sphere)."""
    maximal = [
        tuple(("a", i + 1, e) for i, e in enumerate(eps))
        for eps in itertools.product((0, 1), repeat=n - 1)
    ]
    return AbstractComplex(maximal)


def barycentric_subdivision(X: AbstractComplex) -> AbstractComplex:
    """Vertices are the nonempty simplices of X ordered by decreasing
    dimension (ties by vertex tuple); simplices are strictly decreasing
    chains."""
    pk = X.key

    def sd_key(tok):
        return (-len(tok), tuple(pk(t) for t in tok))

    maximal = []
    for m in X.maximal:
        for perm in itertools.permutations(m):
            chain = tuple(
                tuple(sorted(perm[:j], key=pk)) for j in range(len(m), 0, -1)
            )
            maximal.append(chain)
    return AbstractComplex(maximal, key=sd_key)


@lru_cache(maxsize=None)
def subdivided_octahedron(n: int) -> AbstractComplex:
    return barycentric_subdivision(coned_octahedron(n))


def is_tail_sequence(field: Field, v) -> bool:
    """v_i = e_i + nonzero tail supported on coordinates > i, for all i."""
    v = np.asarray(v, dtype=field.dtype)
    if v.ndim != 2:
        return False
    m, n = v.shape
    if m != n - 1:
        return False
    for i in range(m):
        if v[i, i] != 1 or v[i, :i].any() or not v[i, i + 1 :].any():
            return False
    return True


def tail_sequences(field: Field, n: int):
    """All tail sequences, lexicographic in each tail (first index slowest)."""
    per_row = []
    for i in range(n - 1):
        rows = []
        for tail in itertools.product(field.elements(), repeat=n - 1 - i):
            if not any(tail):
                continue
            v = np.zeros(n, dtype=field.dtype)
            v[i] = 1
            v[i + 1 :] = tail
            rows.append(v)
        per_row.append(rows)
    for combo in itertools.product(*per_row):
        yield np.stack(combo)


class FlagMap:
    """Simplicial map from the subdivided coned octahedron to the building.

    A subdivision vertex (a simplex of the octahedron complex) maps to the
    orthogonal complement of the span of its labeled vectors; labels are
    e_i for ("a",i,0), v_i for ("a",i,1), e_n for ("b",).  Dimension
    preserving: the labels carry distinct leading coordinates.
    """

    def __init__(self, building: BuildingComplex, v):
        field, n = building.field, building.n
        v = np.asarray(v, dtype=field.dtype)
        if not is_tail_sequence(field, v):
            raise NotATailSequence("rows must be e_i + nonzero higher tail")
        self.building = building
        self.field = field
        self.n = n
        self.v = v
        theta = {("b",): np.zeros(n, dtype=field.dtype)}
        theta[("b",)][n - 1] = 1
        for i in range(1, n):
            e = np.zeros(n, dtype=field.dtype)
            e[i - 1] = 1
            theta[("a", i, 0)] = e
            theta[("a", i, 1)] = v[i - 1]
        self.theta = theta
        self._vertex_cache: dict = {}

    def vertex_image(self, sd_vertex) -> Subspace:
        U = self._vertex_cache.get(sd_vertex)
        if U is None:
            rows = np.stack([self.theta[tok] for tok in sd_vertex])
            U = span_of(self.field, rows).perp()
            self._vertex_cache[sd_vertex] = U
        return U

    def image_flag(self, sd_simplex) -> FlagSimplex:
        """Image of a subdivision simplex; larger octahedron simplices map
        to smaller subspaces, so the flag comes out ordered by dimension."""
        return FlagSimplex(self.vertex_image(x) for x in sd_simplex)
