"""Closed-form dimension values and q-identities in exact integer arithmetic.

These are Z-identities, so everything here runs over unbounded integers and
rationals, never in F_q.  They serve as an independent oracle against
computed homology ranks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import PoleHit
from .grassmann import gauss_binomial


def steinberg_dim(m: int, q: int) -> int:
    """q^C(m,2): top reduced homology dimension of the building of F_q^m."""
    return q ** comb(m, 2)


def twisted_dim_product_sum(n: int, k: int, q: int) -> int:
    """Sum over 1 <= a_1 < ... < a_(n-k) <= n-1 of prod (q^(a_j) - 1)."""
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    return sum(
        _prod(q**a - 1 for a in alphas)
        for alphas in itertools.combinations(range(1, n), n - k)
    )


def twisted_dim_alternating(n: int, k: int, q: int) -> int:
    """Sum over j of (-1)^(j-k) C(j,k) q^C(n-j,2) [n j]_q."""
    if not 1 <= k <= n - 1:
        raise ValueError("need 1 <= k <= n-1")
    return sum(
        (-1) ** (j - k) * comb(j, k) * steinberg_dim(n - j, q) * gauss_binomial(n, j, q)
        for j in range(k, n + 1)
    )


def _prod(items) -> int:
    out = 1
    for x in items:
        out *= x
    return out


@dataclass
class DimReport:
    n: int
    k: int
    q: int
    product_sum: int
    alternating_sum: int
    computed_rank: int | None = None

    @property
    def match(self) -> bool:
        ok = self.product_sum == self.alternating_sum
        if self.computed_rank is not None:
            ok = ok and self.computed_rank == self.product_sum
        return ok


def dim_report(n: int, k: int, q: int, computed_rank: int | None = None) -> DimReport:
    return DimReport(n, k, q, twisted_dim_product_sum(n, k, q),
                     twisted_dim_alternating(n, k, q), computed_rank)


def qbinom_theorem_holds(n: int, q: int, lam: int) -> bool:
    """prod (1 + q^j lam) == sum q^C(j,2) [n j]_q lam^j."""
    lhs = _prod(1 + q**j * lam for j in range(n))
    rhs = sum(q ** comb(j, 2) * gauss_binomial(n, j, q) * lam**j for j in range(n + 1))
    return lhs == rhs


def factored_poly_holds(n: int, q: int, t: int) -> bool:
    """prod (t - q^j) == sum (-1)^j q^C(j,2) [n j]_q t^(n-j)."""
    lhs = _prod(t - q**j for j in range(n))
    rhs = sum(
        (-1) ** j * q ** comb(j, 2) * gauss_binomial(n, j, q) * t ** (n - j)
        for j in range(n + 1)
    )
    return lhs == rhs


def derivative_identity_holds(n: int, q: int, k: int, t: int) -> bool:
    """The k-fold derivative identity at a sample point t != q^j.

    LHS: prod (q^j - t) times the sum over increasing k-tuples of indices
    of the product of 1/(q^a - t); RHS: the alternating binomial form.
    Exact rationals throughout.
    """
    if any(t == q**j for j in range(n)):
        raise PoleHit(f"t={t} is a pole for q={q}, n={n}")
    prod_all = _prod(q**j - t for j in range(n))
    lhs = sum(
        Fraction(prod_all)
        * _prod(Fraction(1, q**a - t) for a in alphas)
        for alphas in itertools.combinations(range(n), k)
    )
    rhs = sum(
        (-1) ** (j - k)
        * comb(j, k)
        * q ** comb(n - j, 2)
        * gauss_binomial(n, j, q)
        * Fraction(t) ** (j - k)
        for j in range(k, n + 1)
    )
    return lhs == rhs


def cancelled_unit_specialization_holds(n: int, q: int, k: int) -> bool:
    """The t = 1 specialization in its pole-free, division-cancelled form.

    Each summand of the derivative identity's LHS expands to the product of
    (q^j - t) over the non-chosen indices; at t = 1 only tuples containing
    index 0 survive, and the total must equal the product-sum dimension.
    """
    total = sum(
        _prod(q**j - 1 for j in range(n) if j not in set(alphas))
        for alphas in itertools.combinations(range(n), k)
    )
    return total == twisted_dim_product_sum(n, k, q)


def q_identity_checks(n: int, q: int, sample_points) -> bool:
    """Exact checks of the q-binomial identities at integer sample points.

    Raises PoleHit if a derivative-identity sample lands on t = q^j; the
    t = 1 specialization is checked separately in cancelled form.
    """
    for lam in sample_points:
        if not qbinom_theorem_holds(n, q, lam):
            return False
    for t in sample_points:
        if not factored_poly_holds(n, q, t):
            return False
    for k in range(1, n):
        for t in sample_points:
            if any(t == q**j for j in range(n)):
                raise PoleHit(f"t={t} is a pole for q={q}, n={n}")
            if not derivative_identity_holds(n, q, k, t):
                return False
        if not cancelled_unit_specialization_holds(n, q, k):
            return False
    return True


def formulas_grid(max_n: int, qs=(2, 3, 4, 5)):
    """Rows (n, k, q, product_sum, alternating_sum, match) over the grid."""
    rows = []
    for n in range(2, max_n + 1):
        for k in range(1, n):
            for q in qs:
                rep = dim_report(n, k, q)
                rows.append((n, k, q, rep.product_sum, rep.alternating_sum, rep.match))
    return rows
