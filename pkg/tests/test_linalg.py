import itertools
import math

import numpy as np
import pytest

from building_homology import linalg
from building_homology.fields import make_field
from building_homology.linalg import _rref_generic

F2 = make_field(2)
F3 = make_field(3)
F9 = make_field(9)


# brute-force oracles ------------------------------------------------------

def row_space_size(field, M):
    """Enumerate every row combination; |row space| = q^rank."""
    seen = set()
    m = M.shape[0]
    for coeffs in itertools.product(field.elements(), repeat=m):
        v = np.zeros(M.shape[1], dtype=field.dtype)
        for c, row in zip(coeffs, M):
            v = field.vadd(v, field.vmul(np.asarray(c, dtype=field.dtype), row))
        seen.add(v.tobytes())
    return len(seen)


def kernel_by_enumeration(field, M):
    out = []
    for vec in itertools.product(field.elements(), repeat=M.shape[1]):
        v = np.array(vec, dtype=field.dtype)
        if not field.vec_mat(v, M.T).any():
            out.append(v)
    return out


def test_rref_identity():
    I = np.eye(3, dtype=np.uint8)
    R, r, piv = linalg.rref(F2, I)
    assert np.array_equal(R, I) and r == 3 and piv == [0, 1, 2]


def test_rref_equal_rows():
    M = np.array([[1, 1], [1, 1]], dtype=np.uint8)
    R, r, piv = linalg.rref(F2, M)
    assert R.tolist() == [[1, 1], [0, 0]] and r == 1


def test_rank_matches_row_space_oracle():
    rng = np.random.default_rng(11)
    M = rng.integers(0, 3, size=(4, 6)).astype(np.uint8)
    expected = round(math.log(row_space_size(F3, M), 3))
    assert linalg.rank(F3, M) == expected


@pytest.mark.parametrize("field,shape", [(F2, (5, 7)), (F3, (4, 5)), (F9, (3, 4))])
def test_rref_idempotent(field, shape):
    rng = np.random.default_rng(3)
    for _ in range(10):
        M = rng.integers(0, field.q, size=shape).astype(field.dtype)
        R, r, piv = linalg.rref(field, M)
        R2, r2, piv2 = linalg.rref(field, R)
        assert np.array_equal(R, R2) and r == r2 and piv == piv2


def test_kernel_zero_matrix():
    K = linalg.kernel_basis(F2, np.zeros((2, 3), dtype=np.uint8))
    assert K.shape == (3, 3) and linalg.rank(F2, K) == 3


def test_kernel_identity_empty():
    assert linalg.kernel_basis(F3, np.eye(3, dtype=np.uint8)).shape == (0, 3)


def test_kernel_matches_enumeration_oracle():
    rng = np.random.default_rng(8)
    M = rng.integers(0, 2, size=(3, 5)).astype(np.uint8)
    K = linalg.kernel_basis(F2, M)
    for row in K:
        assert not F2.vec_mat(row, M.T).any()
    expected = len(kernel_by_enumeration(F2, M))
    assert 2 ** K.shape[0] == expected
    assert linalg.rank(F2, K) == K.shape[0]


@pytest.mark.parametrize("field", [F2, F3, F9])
def test_rank_nullity(field):
    rng = np.random.default_rng(21)
    for _ in range(10):
        m, n = rng.integers(1, 7, size=2)
        M = rng.integers(0, field.q, size=(m, n)).astype(field.dtype)
        assert linalg.rank(field, M) + linalg.kernel_basis(field, M).shape[0] == n


def test_solve_in_span_basic():
    basis = np.eye(3, dtype=np.uint8)[:2]
    c = linalg.solve_in_span(F2, basis, np.array([1, 1, 0], dtype=np.uint8))
    assert c.tolist() == [1, 1]
    assert linalg.solve_in_span(F2, basis[:1], np.array([0, 1, 0], dtype=np.uint8)) is None


def test_solve_in_span_matches_rank_oracle():
    rng = np.random.default_rng(17)
    for _ in range(30):
        basis = rng.integers(0, 3, size=(2, 4)).astype(np.uint8)
        R, r, piv = linalg.rref(F3, basis)
        basis = R[:r]
        target = rng.integers(0, 3, size=4).astype(np.uint8)
        stacked = np.concatenate([basis, target.reshape(1, -1)])
        inside = linalg.rank(F3, stacked) == basis.shape[0]
        got = linalg.solve_in_span(F3, basis, target)
        assert (got is not None) == inside
        if got is not None:
            assert np.array_equal(F3.vec_mat(got, basis), target)


def test_packed_path_agrees_with_generic():
    rng = np.random.default_rng(2)
    for _ in range(20):
        m, n = rng.integers(1, 9, size=2)
        M = rng.integers(0, 2, size=(m, n)).astype(np.uint8)
        R1, r1, p1 = linalg.rref(F2, M)
        R2, r2, p2 = _rref_generic(F2, M)
        assert np.array_equal(R1, R2) and r1 == r2 and list(p1) == list(p2)


def test_digit_serialization_roundtrip():
    rng = np.random.default_rng(4)
    M = rng.integers(0, 3, size=(2, 4)).astype(np.uint8)
    s = linalg.mat_to_digits(F3, M)
    assert np.array_equal(linalg.mat_from_digits(F3, s, 4), M)
    F11 = make_field(11)
    M = rng.integers(0, 11, size=(2, 3)).astype(F11.dtype)
    s = linalg.mat_to_digits(F11, M)
    assert np.array_equal(linalg.mat_from_digits(F11, s, 3), M)
