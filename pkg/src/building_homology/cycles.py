"""Explicit twisted cycles on the building and its octahedral model.

Four families:
  * apartment cycles: signed sums of the n! chambers of an apartment
    (untwisted coefficients);
  * octahedron cycles attached to a tail sequence, supported on the
    subdivided coned octahedron, and their pushforwards to the building,
    which form a basis of the top twisted homology in grade 1;
  * relation cycles in grade n-1, supported on at most three hyperplanes,
    whose standard family is a basis in degree 0;
  * circuit cycles in grade k, supported on (n-k+2)!/2 flags, attaining
    the minimum support size.
"""

from __future__ import annotations

import itertools

import numpy as np

from .complexes import (
    BuildingComplex,
    FlagMap,
    FlagSimplex,
    is_tail_sequence,
    subdivided_octahedron,
    tail_sequences,
)
from .errors import (
    DegenerateFrame,
    DegenerateInput,
    DependenceViolation,
    NotATailSequence,
    OrderViolation,
)
from .exterior import star, unit_perp, wedge_rows
from .grassmann import full_space, span_of
from .homology import AmbientLocalSystem, TwistedChain, lusztig_system, untwisted_system
from . import linalg


def perm_sign(perm) -> int:
    """Sign of a permutation given as a tuple of images."""
    inv = sum(
        1 for a, b in itertools.combinations(range(len(perm)), 2) if perm[a] > perm[b]
    )
    return -1 if inv % 2 else 1


def chi(eps, perm) -> int:
    """(-1)^(sum eps) times the sign of the permutation."""
    return (-1) ** (sum(eps) % 2) * perm_sign(perm)


def apartment_cycle(building: BuildingComplex, frame) -> TwistedChain:
    """Signed sum of the n! chambers of the apartment of a frame."""
    field, n = building.field, building.n
    frame = tuple(frame)
    if len(frame) != n or len(set(frame)) != n or any(L.dim != 1 for L in frame):
        raise DegenerateFrame("need n distinct lines")
    gens = np.concatenate([L.basis for L in frame])
    if span_of(field, gens).dim != n:
        raise DegenerateFrame("lines do not span the ambient space")
    data = {}
    for perm in itertools.permutations(range(n)):
        flag = FlagSimplex(
            span_of(field, gens[list(perm[:j])]) for j in range(1, n)
        )
        data[flag] = np.array([field.sign_elem(perm_sign(perm))], dtype=field.dtype)
    return TwistedChain(building, untwisted_system(field), n - 2, data)


def _sequence_tokens(eps, cone_at=None):
    """The vertex sequence a^eps, with position cone_at replaced by the apex."""
    out = []
    for i, e in enumerate(eps, start=1):
        out.append(("b",) if i == cone_at else ("a", i, e))
    return tuple(out)


def _chain_simplex(x):
    """The top subdivision simplex through the prefix sets of a sequence."""
    return tuple(tuple(sorted(x[:m])) for m in range(len(x), 0, -1))


def octahedron_cycle(building: BuildingComplex, v) -> TwistedChain:
    """The twisted top cycle on the subdivided coned octahedron for v.

    Coefficients: on the chain through a permuted sign pattern eps it is
    chi * w(v^eps); on a chain whose j-th slot is the apex, with eps_j = 0,
    it is chi * (w(v^(eps + e_j)) - w(v^eps)).  Values lie in the pulled
    back smallest-subspace system by construction.
    """
    field, n = building.field, building.n
    v = np.asarray(v, dtype=field.dtype)
    if not is_tail_sequence(field, v):
        raise NotATailSequence("rows must be e_i + nonzero higher tail")
    sd = subdivided_octahedron(n)
    fmap = FlagMap(building, v)
    system = pullback_system(fmap, sd)

    unit = np.eye(n, dtype=field.dtype)

    def rows_for(eps):
        return np.stack([v[i] if e else unit[i] for i, e in enumerate(eps)])

    w_of = {}
    for eps in itertools.product((0, 1), repeat=n - 1):
        w_of[eps] = unit_perp(field, rows_for(eps))

    data = {}
    for eps in itertools.product((0, 1), repeat=n - 1):
        base = _sequence_tokens(eps)
        for perm in itertools.permutations(range(1, n)):
            x = tuple(base[p - 1] for p in perm)
            coeff = field.vmul(
                np.asarray(field.sign_elem(chi(eps, perm)), dtype=field.dtype),
                w_of[eps],
            )
            data[_chain_simplex(x)] = coeff
    for j in range(1, n):
        for eps in itertools.product((0, 1), repeat=n - 1):
            if eps[j - 1] != 0:
                continue
            eps_j = tuple(e + (1 if i == j - 1 else 0) for i, e in enumerate(eps))
            diff = field.vsub(w_of[eps_j], w_of[eps])
            if not diff.any():
                continue
            base = _sequence_tokens(eps, cone_at=j)
            for perm in itertools.permutations(range(1, n)):
                x = tuple(base[p - 1] for p in perm)
                coeff = field.vmul(
                    np.asarray(field.sign_elem(chi(eps, perm)), dtype=field.dtype),
                    diff,
                )
                data[_chain_simplex(x)] = coeff
    return TwistedChain(sd, system, n - 2, data)


def pullback_system(fmap: FlagMap, sd) -> AmbientLocalSystem:
    """Inverse image of the grade-1 smallest-subspace system under the map."""
    field, n = fmap.field, fmap.n

    def value(simplex):
        return fmap.vertex_image(simplex[0])

    return AmbientLocalSystem(field, n, value, full_space(field, n), grade=1)


def push_forward(chain: TwistedChain, fmap: FlagMap, building: BuildingComplex,
                 system: AmbientLocalSystem) -> TwistedChain:
    """Sum coefficients over fibers of the simplicial map.

    Valid without sign corrections because the map preserves the vertex
    order on every simplex; raises OrderViolation if that ever fails.
    """
    field = building.field
    out: dict = {}
    for s, vec in chain.data.items():
        try:
            tau = fmap.image_flag(s)
        except ValueError as exc:
            raise OrderViolation(str(exc)) from exc
        cur = out.get(tau)
        out[tau] = vec if cur is None else field.vadd(cur, vec)
    return TwistedChain(building, system, chain.degree, out)


def building_cycle(building: BuildingComplex, v) -> TwistedChain:
    """Pushforward of the octahedron cycle of v to the building."""
    c = octahedron_cycle(building, v)
    fmap = FlagMap(building, v)
    return push_forward(c, fmap, building, lusztig_system(building.field, building.n, 1))


def d1_basis(building: BuildingComplex):
    """Pushed octahedron cycles over all tail sequences.

    A basis of the top twisted homology in grade 1; its size is the product
    of (q^i - 1) over i = 1..n-1.
    """
    return [building_cycle(building, v) for v in tail_sequences(building.field, building.n)]


def marker_flag(building: BuildingComplex, v) -> FlagSimplex:
    """The flag of perps of the tail-sequence prefixes (longest first).

    The pushed cycle of v carries coefficient (-1)^(n-1) w(v) here, and
    every other tail sequence's pushed cycle vanishes here.
    """
    field, n = building.field, building.n
    v = np.asarray(v, dtype=field.dtype)
    return FlagSimplex(
        span_of(field, v[:m]).perp() for m in range(n - 1, 0, -1)
    )


def relation_cycle(building: BuildingComplex, u, i: int) -> TwistedChain:
    """Degree-0 cycle in grade n-1 from the relation e_i + u = (u + e_i).

    Supported on the perp hyperplanes of e_i, u and u + e_i with star-dual
    coefficients; at most three vertices.
    """
    field, n = building.field, building.n
    u = np.asarray(u, dtype=field.dtype)
    e = np.zeros(n, dtype=field.dtype)
    e[i - 1] = 1
    s = field.vadd(u, e)
    if not (u.any() and s.any()):
        raise DegenerateInput("u and u + e_i must be nonzero")
    system = lusztig_system(field, n, n - 1)
    data: dict = {}
    for vec, sign in ((e, 1), (u, 1), (s, -1)):
        vertex = FlagSimplex((span_of(field, vec).perp(),))
        coeff = star(wedge_rows(field, vec)).coords
        if sign < 0:
            coeff = field.vneg(coeff)
        cur = data.get(vertex)
        data[vertex] = coeff if cur is None else field.vadd(cur, coeff)
    return TwistedChain(building, system, 0, data)


def dn1_basis(building: BuildingComplex):
    """Relation cycles over u nonzero and supported below coordinate i.

    A basis of the degree-0 twisted homology in grade n-1; its size is the
    sum of (q^(i-1) - 1) over i = 2..n.
    """
    field, n = building.field, building.n
    out = []
    for i in range(2, n + 1):
        for head in itertools.product(field.elements(), repeat=i - 1):
            if not any(head):
                continue
            u = np.zeros(n, dtype=field.dtype)
            u[: i - 1] = head
            out.append(relation_cycle(building, u, i))
    return out


def standard_circuit(building: BuildingComplex, k: int) -> np.ndarray:
    """Default circuit tuple: unit vectors plus the negated sum."""
    field, n = building.field, building.n
    m = n - k + 2
    rows = np.zeros((m, n), dtype=field.dtype)
    for i in range(m - 1):
        rows[i, i] = 1
    # coordinates of the partial sum are 0/1, valid in every field
    rows[m - 1] = field.vneg(rows[: m - 1].sum(axis=0).astype(field.dtype))
    return rows


def _table_sum(field, rows):
    acc = np.zeros(rows.shape[1], dtype=field.dtype)
    for r in rows:
        acc = field.vadd(acc, r)
    return acc


def circuit_cycle(building: BuildingComplex, k: int, vectors=None) -> TwistedChain:
    """Grade-k cycle from m = n-k+2 vectors whose only dependence is zero sum.

    Supported on the flags of perps of prefixes over all injective
    (m-2)-arrangements; support size m!/2.
    """
    field, n = building.field, building.n
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    m = n - k + 2
    u = standard_circuit(building, k) if vectors is None else np.asarray(
        vectors, dtype=field.dtype
    )
    if u.shape != (m, n):
        raise DependenceViolation(f"need {m} vectors of length {n}")
    if _table_sum(field, u).any():
        raise DependenceViolation("vectors must sum to zero")
    for drop in range(m):
        rest = np.concatenate([u[:drop], u[drop + 1 :]])
        if linalg.rank(field, rest) != m - 1:
            raise DependenceViolation("every m-1 of the vectors must be independent")
    system = lusztig_system(field, n, k)
    data = {}
    for pi in itertools.permutations(range(m), m - 2):
        flag = FlagSimplex(
            span_of(field, u[list(pi[:j])]).perp() for j in range(m - 2, 0, -1)
        )
        data[flag] = star(wedge_rows(field, u[list(pi)])).coords
    return TwistedChain(building, system, n - k - 1, data)


def enumerate_frames(building: BuildingComplex):
    """All frames: unordered sets of n independent lines."""
    field, n = building.field, building.n
    lines = building.grassmannian(1)
    for combo in itertools.combinations(lines, n):
        gens = np.concatenate([L.basis for L in combo])
        if linalg.rank(field, gens) == n:
            yield combo


def frames_through_chamber(building: BuildingComplex, chamber: FlagSimplex):
    """Frames whose apartment contains the given chamber."""
    for frame in enumerate_frames(building):
        spans = {}
        ok = True
        for U in chamber:
            hit = False
            for size in range(1, building.n):
                for I in itertools.combinations(range(building.n), size):
                    key = I
                    if key not in spans:
                        gens = np.concatenate([frame[i].basis for i in I])
                        spans[key] = span_of(building.field, gens)
                    if spans[key] == U:
                        hit = True
                        break
                if hit:
                    break
            if not hit:
                ok = False
                break
        if ok:
            yield frame
