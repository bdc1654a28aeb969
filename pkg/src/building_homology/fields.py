"""Exact arithmetic in F_q with elements encoded as integers 0..q-1.

Prime fields use modular arithmetic directly (any prime q < 2**16).
Extension fields of size <= 32 use full lookup tables built from a fixed
irreducible polynomial, so element encodings are stable across runs: an
element sum(c_i * p**i) stands for the polynomial sum(c_i * x**i) modulo
the irreducible polynomial below.
"""

from __future__ import annotations

import functools

import numpy as np

from .errors import UnsupportedCardinality

# q -> (p, e, monic irreducible polynomial, low-to-high coefficients incl. lead)
_IRREDUCIBLE = {
    4: (2, 2, (1, 1, 1)),           # x^2 + x + 1
    8: (2, 3, (1, 1, 0, 1)),        # x^3 + x + 1
    9: (3, 2, (2, 2, 1)),           # x^2 + 2x + 2
    16: (2, 4, (1, 1, 0, 0, 1)),    # x^4 + x + 1
    25: (5, 2, (2, 4, 1)),          # x^2 + 4x + 2
    27: (3, 3, (1, 2, 0, 1)),       # x^3 + 2x + 1
    32: (2, 5, (1, 0, 1, 0, 0, 1)), # x^5 + x^2 + 1
}

_PRIME_LIMIT = 1 << 16


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


class Field:
    """Common interface: scalar ops on ints, vectorized ops on numpy arrays."""

    q: int
    p: int
    e: int
    dtype: np.dtype

    def elements(self):
        return range(self.q)

    def zeros(self, shape):
        return np.zeros(shape, dtype=self.dtype)

    def sign_elem(self, s: int) -> int:
        """The field element for an integer sign (any int, e.g. +-1)."""
        s %= self.p
        return s if self.e == 1 else self.mul_int(s)

    def mul_int(self, s: int) -> int:  # pragma: no cover - overridden
        raise NotImplementedError

    # scalar ops -----------------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    # vector ops -----------------------------------------------------------
    def vadd(self, a, b):
        raise NotImplementedError

    def vsub(self, a, b):
        raise NotImplementedError

    def vmul(self, a, b):
        raise NotImplementedError

    def vneg(self, a):
        raise NotImplementedError

    def vec_mat(self, c, M):
        """Row vector times matrix over the field."""
        raise NotImplementedError

    def mat_mul(self, A, B):
        raise NotImplementedError

    def __repr__(self):
        return f"F{self.q}"


class PrimeField(Field):
    def __init__(self, p: int):
        self.q = self.p = p
        self.e = 1
        self.dtype = np.dtype(np.uint8) if p <= 251 else np.dtype(np.int32)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(int(a), self.p - 2, self.p)

    def vadd(self, a, b):
        return ((a.astype(np.int64) + b) % self.p).astype(self.dtype)

    def vsub(self, a, b):
        return ((a.astype(np.int64) - b) % self.p).astype(self.dtype)

    def vmul(self, a, b):
        return ((np.asarray(a, dtype=np.int64) * b) % self.p).astype(self.dtype)

    def vneg(self, a):
        return ((-a.astype(np.int64)) % self.p).astype(self.dtype)

    def vec_mat(self, c, M):
        return ((c.astype(np.int64) @ M.astype(np.int64)) % self.p).astype(self.dtype)

    def mat_mul(self, A, B):
        return ((A.astype(np.int64) @ B.astype(np.int64)) % self.p).astype(self.dtype)


class ExtensionField(Field):
    """F_{p^e} via full add/mul/inv tables (q <= 32)."""

    def __init__(self, q: int):
        p, e, poly = _IRREDUCIBLE[q]
        self.q, self.p, self.e = q, p, e
        self.poly = poly
        self.dtype = np.dtype(np.uint8)
        self._build_tables()

    def _digits(self, x: int):
        d = []
        for _ in range(self.e):
            d.append(x % self.p)
            x //= self.p
        return d

    def _encode(self, digits) -> int:
        x = 0
        for c in reversed(digits):
            x = x * self.p + c
        return x

    def _build_tables(self):
        q, p, e = self.q, self.p, self.e
        add = np.zeros((q, q), dtype=np.uint8)
        mul = np.zeros((q, q), dtype=np.uint8)
        for a in range(q):
            da = self._digits(a)
            for b in range(q):
                db = self._digits(b)
                add[a, b] = self._encode([(x + y) % p for x, y in zip(da, db)])
                # polynomial product reduced modulo the irreducible polynomial
                prod = [0] * (2 * e - 1)
                for i, x in enumerate(da):
                    for j, y in enumerate(db):
                        prod[i + j] = (prod[i + j] + x * y) % p
                for deg in range(2 * e - 2, e - 1, -1):
                    c = prod[deg]
                    if c:
                        prod[deg] = 0
                        # x^deg = -(poly minus lead) * x^(deg-e)
                        for j in range(e):
                            prod[deg - e + j] = (prod[deg - e + j] - c * self.poly[j]) % p
                mul[a, b] = self._encode(prod[:e])
        inv = np.zeros(q, dtype=np.uint8)
        for a in range(1, q):
            hits = np.nonzero(mul[a] == 1)[0]
            if hits.size != 1:
                raise UnsupportedCardinality(
                    f"polynomial for q={q} is not irreducible"
                )
            inv[a] = hits[0]
        neg = np.zeros(q, dtype=np.uint8)
        for a in range(q):
            neg[a] = self._encode([(-x) % p for x in self._digits(a)])
        self.add_table, self.mul_table = add, mul
        self.inv_table, self.neg_table = inv, neg
        self.sub_table = add[:, neg]  # a - b = a + (-b)

    def mul_int(self, s: int) -> int:
        # s copies of 1 summed in the field
        out = 0
        for _ in range(s % self.p):
            out = int(self.add_table[out, 1])
        return out

    def add(self, a, b):
        return int(self.add_table[a, b])

    def sub(self, a, b):
        return int(self.sub_table[a, b])

    def mul(self, a, b):
        return int(self.mul_table[a, b])

    def neg(self, a):
        return int(self.neg_table[a])

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return int(self.inv_table[a])

    def vadd(self, a, b):
        return self.add_table[a, b]

    def vsub(self, a, b):
        return self.sub_table[a, b]

    def vmul(self, a, b):
        return self.mul_table[a, b]

    def vneg(self, a):
        return self.neg_table[a]

    def vec_mat(self, c, M):
        out = np.zeros(M.shape[1], dtype=np.uint8)
        for i, ci in enumerate(c):
            if ci:
                out = self.add_table[out, self.mul_table[ci, M[i]]]
        return out

    def mat_mul(self, A, B):
        out = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
        for i in range(A.shape[0]):
            out[i] = self.vec_mat(A[i], B)
        return out


@functools.lru_cache(maxsize=None)
def make_field(q: int) -> Field:
    """Return the field with q elements, or raise UnsupportedCardinality.

    Supported: prime q < 2**16, and prime powers q <= 32 from the fixed
    irreducible-polynomial table.
    """
    if not isinstance(q, int) or q < 2:
        raise UnsupportedCardinality(f"q={q} is not a prime power >= 2")
    if q in _IRREDUCIBLE:
        return ExtensionField(q)
    if q < _PRIME_LIMIT and _is_prime(q):
        return PrimeField(q)
    raise UnsupportedCardinality(
        f"q={q}: supported are primes < 2^16 and prime powers <= 32"
    )
