import numpy as np
import pytest

from building_homology.errors import AmbientMismatch
from building_homology.fields import make_field
from building_homology.grassmann import (
    Subspace,
    enumerate_grassmannian,
    full_space,
    gauss_binomial,
    span_of,
    subspaces_of,
    superspaces,
    zero_space,
)

F2 = make_field(2)
F3 = make_field(3)


def test_gauss_binomial_values():
    assert gauss_binomial(4, 2, 2) == 35
    assert gauss_binomial(3, 1, 2) == 7
    assert gauss_binomial(5, 0, 3) == 1
    assert gauss_binomial(5, 6, 3) == 0
    assert gauss_binomial(5, -1, 3) == 0


def test_enumeration_count_matches_formula():
    # spec invariant: all n <= 5, q in {2,3}, all j
    for q, field in ((2, F2), (3, F3)):
        for n in range(1, 6):
            for j in range(0, n + 1):
                got = sum(1 for _ in enumerate_grassmannian(field, n, j))
                assert got == gauss_binomial(n, j, q), (n, j, q)


def test_enumeration_distinct_and_canonical():
    subs = list(enumerate_grassmannian(F3, 4, 2))
    assert len(set(subs)) == len(subs)
    for U in subs:
        assert U.dim == 2
        R = span_of(F3, U.basis)
        assert R == U


def test_zero_subspace_enumeration():
    assert list(enumerate_grassmannian(F2, 3, 0)) == [zero_space(F2, 3)]


def test_perp_example():
    U = span_of(F2, [[1, 0, 0]])
    assert U.perp() == span_of(F2, [[0, 1, 0], [0, 0, 1]])


def test_perp_involution_random():
    rng = np.random.default_rng(9)
    for _ in range(50):
        q = int(rng.choice([2, 3]))
        field = make_field(q)
        n = int(rng.integers(1, 6))
        rows = rng.integers(0, q, size=(int(rng.integers(0, n + 1)), n))
        U = span_of(field, rows.astype(np.int64), n=n)
        assert U.perp().perp() == U
        assert U.perp().dim == n - U.dim


def test_intersect_example():
    A = span_of(F2, [[1, 0, 0], [0, 1, 0]])
    B = span_of(F2, [[0, 1, 0], [0, 0, 1]])
    assert A.intersect(B) == span_of(F2, [[0, 1, 0]])


def test_modular_dimension_law():
    rng = np.random.default_rng(13)
    for _ in range(30):
        q = int(rng.choice([2, 3]))
        field = make_field(q)
        n = int(rng.integers(1, 6))
        U = span_of(field, rng.integers(0, q, size=(n, n)).astype(np.int64)[: rng.integers(0, n + 1)], n=n)
        W = span_of(field, rng.integers(0, q, size=(n, n)).astype(np.int64)[: rng.integers(0, n + 1)], n=n)
        assert U.plus(W).dim + U.intersect(W).dim == U.dim + W.dim


def test_perp_reverses_inclusion_bijectively():
    for n in (2, 3, 4):
        for j in range(0, n + 1):
            Gj = list(enumerate_grassmannian(F2, n, j))
            images = {U.perp() for U in Gj}
            assert len(images) == len(Gj)
            assert all(W.dim == n - j for W in images)
    U = span_of(F2, [[1, 0, 0]])
    W = span_of(F2, [[1, 0, 0], [0, 1, 0]])
    assert W.contains(U) and U.perp().contains(W.perp())


def test_superspaces_and_subspaces_counts():
    U = span_of(F2, [[1, 1, 0, 0]])
    sups = list(superspaces(U, 2))
    assert len(sups) == gauss_binomial(3, 1, 2)
    assert all(W.contains(U) and W.dim == 2 for W in sups)
    assert len(set(sups)) == len(sups)
    W = full_space(F2, 4)
    assert len(list(subspaces_of(W, 2))) == 35


def test_contains_and_vectors():
    U = span_of(F3, [[1, 0, 2], [0, 1, 1]])
    assert U.contains_vector(np.array([1, 1, 0], dtype=np.uint8))
    assert not U.contains_vector(np.array([0, 0, 1], dtype=np.uint8))
    assert full_space(F3, 3).contains(U)
    assert U.contains(zero_space(F3, 3))


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        span_of(F2, [[1, 0]]).plus(span_of(F2, [[1, 0, 0]]))
    with pytest.raises(AmbientMismatch):
        span_of(F2, [[1, 0]]).intersect(span_of(F3, [[1, 0]]))


def test_serial_format_and_equality():
    U = span_of(F2, [[1, 0, 0]])
    assert U.serial == "3:2:100"
    V = span_of(F2, [[1, 0, 0], [1, 0, 0]])
    assert U == V and hash(U) == hash(V)
    assert U != span_of(F2, [[0, 1, 0]])
