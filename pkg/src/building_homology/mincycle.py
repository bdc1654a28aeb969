"""Minimum-support nonzero cycles and homology-code parameters.

The weight of a chain is the number of simplices carrying a nonzero
coefficient block, not the number of nonzero field coordinates.  The
search space is the cycle space of a degree, up to scalar: when q^d fits
the budget the scan is exhaustive over projective classes (Gray-code order
for q = 2, leading-one odometer otherwise); otherwise seeded random
combinations plus support-local descent, flagged non-exhaustive.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import gf2
from .homology import (
    AmbientLocalSystem,
    TwistedChain,
    chain_from_vector,
    chain_vector,
    twisted_complex,
)

DEFAULT_BUDGET = 1 << 22
_RANDOM_DRAWS = 1 << 16
_BATCH = 1 << 12


@dataclass
class SearchReport:
    min_weight: int | None
    witness: TwistedChain | None
    exhaustive: bool
    classes_examined: int


@dataclass
class CodeParams:
    length: int
    dimension: int
    min_distance: int | None
    rate: Fraction
    relative_distance: Fraction | None
    exhaustive: bool


def _weights(vectors: np.ndarray, starts: np.ndarray) -> np.ndarray:
    """Block weights of chain coordinate row vectors."""
    hit = np.add.reduceat(vectors != 0, starts, axis=1) > 0
    return hit.sum(axis=1)


def min_support_cycle(X, F: AmbientLocalSystem, i: int, budget: int = DEFAULT_BUDGET,
                      seed: int = 0, seed_chains=()) -> SearchReport:
    """Minimum block weight over nonzero cycles in degree i."""
    tc = twisted_complex(X, F)
    field = F.field
    Z = tc.cycle_space(i)
    d = Z.shape[0]
    if d == 0:
        return SearchReport(None, None, True, 0)
    cb = tc.basis(i)
    block_of = cb.block_of_col()
    starts = np.flatnonzero(np.r_[True, block_of[1:] != block_of[:-1]])
    exhaustive = field.q ** d <= budget

    if exhaustive and field.q == 2:
        weight, mask, examined = gf2.min_block_weight(Z, block_of)
        rows = [j for j in range(d) if (mask >> j) & 1]
        vec = np.bitwise_xor.reduce(Z[rows], axis=0)
        return SearchReport(int(weight), chain_from_vector(tc, i, vec),
                            True, int(examined))

    if exhaustive:
        return _exhaustive_generic(tc, i, Z, starts)

    return _heuristic(tc, i, Z, starts, seed, seed_chains)


def _exhaustive_generic(tc, i, Z, starts) -> SearchReport:
    """Odometer over projective representatives with leading coordinate 1."""
    field = tc.field
    q, d = field.q, Z.shape[0]
    best, best_vec = None, None
    examined = 0
    prime = field.e == 1
    Z64 = Z.astype(np.int64)
    for lead in range(d):
        m = d - lead - 1
        count = q ** m
        if prime:
            divisors = q ** np.arange(m - 1, -1, -1, dtype=np.int64) if m else None
            for lo in range(0, count, _BATCH):
                hi = min(lo + _BATCH, count)
                idx = np.arange(lo, hi, dtype=np.int64)
                reps = np.zeros((hi - lo, d), dtype=np.int64)
                reps[:, lead] = 1
                if m:
                    reps[:, lead + 1 :] = (idx[:, None] // divisors) % q
                chains = (reps @ Z64) % q
                w = _weights(chains, starts)
                j = int(w.argmin())
                examined += hi - lo
                if best is None or int(w[j]) < best:
                    best = int(w[j])
                    best_vec = chains[j].astype(field.dtype)
        else:
            for tail in itertools.product(field.elements(), repeat=m):
                c = np.zeros(d, dtype=field.dtype)
                c[lead] = 1
                c[lead + 1 :] = tail
                vec = field.vec_mat(c, Z)
                w = int(_weights(vec[None, :], starts)[0])
                examined += 1
                if best is None or w < best:
                    best, best_vec = w, vec
    return SearchReport(best, chain_from_vector(tc, i, best_vec), True, examined)


def _heuristic(tc, i, Z, starts, seed, seed_chains) -> SearchReport:
    """Seeded random combinations plus support-local descent."""
    field = tc.field
    q, d = field.q, Z.shape[0]
    rng = np.random.default_rng(seed)
    examined = 0
    best, best_vec = None, None

    def consider(vec):
        nonlocal best, best_vec, examined
        examined += 1
        if not vec.any():
            return
        w = int(_weights(vec[None, :], starts)[0])
        if best is None or w < best:
            best, best_vec = w, vec.copy()

    cb = tc.basis(i)
    for chain in seed_chains:
        consider(chain_vector(chain, cb))

    prime = field.e == 1
    Z64 = Z.astype(np.int64)
    for lo in range(0, _RANDOM_DRAWS, _BATCH):
        coeffs = rng.integers(0, q, size=(_BATCH, d), dtype=np.int64)
        if prime:
            chains = (coeffs @ Z64) % q
        else:
            chains = np.stack(
                [field.vec_mat(c.astype(field.dtype), Z) for c in coeffs]
            ).astype(np.int64)
        w = _weights(chains, starts)
        nz = chains.any(axis=1)
        w = np.where(nz, w, np.iinfo(np.int64).max)
        examined += int(nz.sum())
        j = int(w.argmin())
        if nz[j] and (best is None or int(w[j]) < best):
            best = int(w[j])
            best_vec = chains[j].astype(field.dtype)

    # support-local descent: single kernel-row moves, strict improvement
    if best_vec is not None:
        improved = True
        passes = 0
        while improved and passes < 64:
            improved = False
            passes += 1
            for r in range(d):
                for c in range(1, q):
                    cand = field.vadd(
                        best_vec,
                        field.vmul(np.asarray(c, dtype=field.dtype), Z[r]),
                    )
                    if not cand.any():
                        continue
                    examined += 1
                    w = int(_weights(cand[None, :], starts)[0])
                    if w < best:
                        best, best_vec = w, cand
                        improved = True
    witness = chain_from_vector(tc, i, best_vec) if best_vec is not None else None
    return SearchReport(best, witness, False, examined)


def pruned_chain_dim(X, F: AmbientLocalSystem, i: int) -> int:
    """Dimension of the pruned chain group in degree i."""
    return twisted_complex(X, F).basis(i).dim


def code_params(X, F: AmbientLocalSystem, i: int, budget: int = DEFAULT_BUDGET,
                seed: int = 0, seed_chains=()) -> CodeParams:
    """Length, dimension and distance of the degree-i cycle-space code.

    Length counts pruned i-simplices; dimension is the cycle space's; the
    distance is the minimum support weight from min_support_cycle.
    """
    tc = twisted_complex(X, F)
    cb = tc.basis(i)
    length = len(cb.simplices)
    dimension = tc.cycle_space(i).shape[0]
    report = min_support_cycle(X, F, i, budget=budget, seed=seed,
                               seed_chains=seed_chains)
    dist = report.min_weight
    return CodeParams(
        length=length,
        dimension=dimension,
        min_distance=dist,
        rate=Fraction(dimension, length) if length else Fraction(0),
        relative_distance=Fraction(dist, length) if dist is not None and length else None,
        exhaustive=report.exhaustive,
    )
