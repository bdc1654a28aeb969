import itertools
from fractions import Fraction

import numpy as np
import pytest

from building_homology.complexes import BuildingComplex
from building_homology.cycles import apartment_cycle, circuit_cycle, enumerate_frames
from building_homology.fields import make_field
from building_homology.homology import (
    chain_vector,
    lusztig_system,
    twisted_complex,
    untwisted_system,
    verify_cycle,
)
from building_homology.mincycle import (
    CodeParams,
    SearchReport,
    _weights,
    code_params,
    min_support_cycle,
    pruned_chain_dim,
)

F2 = make_field(2)
F3 = make_field(3)
X32 = BuildingComplex(F2, 3)
X33 = BuildingComplex(F3, 3)
X42 = BuildingComplex(F2, 4)


# independent oracle: enumerate every projective class through plain products
def brute_min_weight(X, F, i):
    tc = twisted_complex(X, F)
    Z = tc.cycle_space(i)
    d = Z.shape[0]
    cb = tc.basis(i)
    starts = np.flatnonzero(
        np.r_[True, cb.block_of_col()[1:] != cb.block_of_col()[:-1]]
    )
    field = F.field
    best = None
    count = 0
    for coeffs in itertools.product(field.elements(), repeat=d):
        if all(c == 0 for c in coeffs):
            continue
        lead = next(c for c in coeffs if c)
        if lead != 1:
            continue  # one representative per projective class
        count += 1
        vec = field.vec_mat(np.array(coeffs, dtype=field.dtype), Z)
        w = int(_weights(vec[None, :], starts)[0])
        best = w if best is None else min(best, w)
    return best, count


def test_block_weight_metric():
    # two blocks of widths 2 and 3: weight counts blocks, not coordinates
    starts = np.array([0, 2])
    v = np.array([[1, 1, 0, 0, 0], [0, 1, 0, 0, 1], [0, 0, 0, 0, 0]])
    assert _weights(v, starts).tolist() == [1, 2, 0]


def test_untwisted_min_weight_is_n_factorial():
    rep = min_support_cycle(X32, untwisted_system(F2), 1)
    assert rep.min_weight == 6
    assert rep.exhaustive and rep.classes_examined == 255
    assert verify_cycle(rep.witness) and len(rep.witness) == 6
    brute, classes = brute_min_weight(X32, untwisted_system(F2), 1)
    assert brute == 6 and classes == 255


def test_apartment_cycle_attains_untwisted_minimum():
    z = apartment_cycle(X32, next(enumerate_frames(X32)))
    assert len(z) == 6


@pytest.mark.parametrize(
    "X,k,degree,expect,classes",
    [
        (X32, 1, 1, 12, 7),
        (X32, 2, 0, 3, 15),
        (X42, 3, 0, 3, 2047),
    ],
)
def test_twisted_min_weights_gf2(X, k, degree, expect, classes):
    rep = min_support_cycle(X, lusztig_system(X.field, X.n, k), degree)
    assert rep.exhaustive
    assert rep.min_weight == expect
    assert rep.classes_examined == classes
    assert verify_cycle(rep.witness) and len(rep.witness) == expect


def test_twisted_min_weight_generic_field():
    rep = min_support_cycle(X33, lusztig_system(F3, 3, 2), 0)
    assert rep.exhaustive and rep.min_weight == 3
    assert rep.classes_examined == (3**10 - 1) // 2
    assert verify_cycle(rep.witness)


def test_generic_path_matches_brute_oracle_small():
    F = lusztig_system(F3, 2, 1)
    X23 = BuildingComplex(F3, 2)
    rep = min_support_cycle(X23, F, 0)
    brute, classes = brute_min_weight(X23, F, 0)
    assert rep.exhaustive and rep.min_weight == brute == 3
    assert rep.classes_examined == classes == 4


def test_empty_cycle_space():
    # the pruned chain group one degree above the twisted cycles is empty
    rep = min_support_cycle(X32, lusztig_system(F2, 3, 1), 2)
    assert rep.min_weight is None and rep.witness is None
    assert rep.exhaustive and rep.classes_examined == 0


def test_degree_zero_cycles_exist_below_homology():
    # homology vanishes in degree 0 for grade 1, but the cycle space does
    # not: a vector on a line minus the same vector on a containing plane
    rep = min_support_cycle(X32, lusztig_system(F2, 3, 1), 0)
    assert rep.min_weight == 2 and rep.exhaustive
    assert verify_cycle(rep.witness)


def test_budget_forces_heuristic_with_seed():
    g = circuit_cycle(X32, 1)
    rep = min_support_cycle(
        X32, lusztig_system(F2, 3, 1), 1, budget=2, seed=1, seed_chains=[g]
    )
    assert not rep.exhaustive
    assert rep.min_weight == 12  # the seed already attains the optimum
    assert verify_cycle(rep.witness)


def test_heuristic_case_4_2_2():
    g = circuit_cycle(X42, 2)
    rep = min_support_cycle(
        X42, lusztig_system(F2, 4, 2), 1, seed=0, seed_chains=[g]
    )
    assert not rep.exhaustive
    assert rep.min_weight is not None and rep.min_weight <= 12
    assert verify_cycle(rep.witness)


def test_weight_is_scalar_invariant():
    tc = twisted_complex(X33, lusztig_system(F3, 3, 2))
    rep = min_support_cycle(X33, lusztig_system(F3, 3, 2), 0)
    vec = chain_vector(rep.witness, tc.basis(0))
    doubled = F3.vmul(np.asarray(2, dtype=np.uint8), vec)
    starts = np.flatnonzero(
        np.r_[True, tc.basis(0).block_of_col()[1:] != tc.basis(0).block_of_col()[:-1]]
    )
    assert _weights(vec[None, :], starts)[0] == _weights(doubled[None, :], starts)[0]


def test_code_params_examples():
    cp = code_params(X32, untwisted_system(F2), 1)
    assert (cp.length, cp.dimension, cp.min_distance) == (21, 8, 6)
    assert cp.rate == Fraction(8, 21) and cp.relative_distance == Fraction(6, 21)
    cp = code_params(X32, lusztig_system(F2, 3, 1), 1)
    assert (cp.length, cp.dimension, cp.min_distance) == (21, 3, 12)
    assert cp.rate == Fraction(3, 21) and cp.relative_distance == Fraction(12, 21)


@pytest.mark.parametrize("q", [2, 3])
def test_code_params_n2_measured(q):
    # length q+1 and dimension q-1 as predicted; the measured distance is 3:
    # a two-point twisted 0-cycle needs a common nonzero vector of two
    # distinct lines (the brute-force oracle below confirms)
    field = make_field(q)
    X = BuildingComplex(field, 2)
    F = lusztig_system(field, 2, 1)
    cp = code_params(X, F, 0)
    assert cp.length == q + 1 and cp.dimension == q - 1
    brute, _ = brute_min_weight(X, F, 0)
    assert cp.min_distance == brute == 3


def test_pruned_chain_dim_vanishes_above_cycles():
    for X, n, q in [(X32, 3, 2), (X33, 3, 3), (X42, 4, 2)]:
        for k in range(1, n):
            assert pruned_chain_dim(X, lusztig_system(X.field, n, k), n - k) == 0
