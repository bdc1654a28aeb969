import itertools
import random

import numpy as np
import pytest

from building_homology.complexes import (
    AbstractComplex,
    BuildingComplex,
    FlagMap,
    FlagSimplex,
    apartment,
    barycentric_subdivision,
    coned_octahedron,
    face,
    is_tail_sequence,
    octahedral_sphere,
    subdivided_octahedron,
    tail_sequences,
)
from building_homology.errors import DegenerateFrame, NotATailSequence
from building_homology.fields import make_field
from building_homology.grassmann import span_of

F2 = make_field(2)
F3 = make_field(3)


def test_building_simplex_counts():
    X = BuildingComplex(F2, 3)
    assert len(X.simplices(0)) == 14  # 7 lines + 7 planes
    assert len(X.simplices(1)) == 21  # each plane holds 3 lines
    assert X.simplices(-1) == [()]
    assert X.simplices(2) == []
    X23 = BuildingComplex(F3, 2)
    assert len(X23.simplices(0)) == 4
    assert X23.simplices(1) == []


def test_building_min_dim_filter():
    X = BuildingComplex(F2, 4)
    all_vertices = X.simplices(0)
    pruned = X.simplices(0, min_dim=2)
    assert len(all_vertices) == 15 + 35 + 15
    assert len(pruned) == 35 + 15
    assert all(s[0].dim >= 2 for s in pruned)


def test_flags_are_validated():
    L = span_of(F2, [[1, 0, 0]])
    P = span_of(F2, [[1, 0, 0], [0, 1, 0]])
    fs = FlagSimplex((L, P))
    assert fs.dims == (1, 2)
    assert face(fs, 1) == (P,)
    assert face(fs, 2) == (L,)
    with pytest.raises(ValueError):
        FlagSimplex((P, L))
    other = span_of(F2, [[0, 0, 1], [0, 1, 0]])
    with pytest.raises(ValueError):
        FlagSimplex((L, other))  # not nested
    from building_homology.grassmann import full_space

    with pytest.raises(ValueError):
        FlagSimplex((L, full_space(F2, 3)))  # not proper


def test_apartment_hexagon_and_chamber_count():
    frame = tuple(span_of(F2, [row]) for row in np.eye(3, dtype=np.uint8))
    A = apartment(frame)
    assert len(A.simplices(0)) == 6 and len(A.simplices(1)) == 6
    assert len(A.maximal) == 6
    frame4 = tuple(span_of(F2, [row]) for row in np.eye(4, dtype=np.uint8))
    assert len(apartment(frame4).maximal) == 24


def test_apartment_degenerate_frame():
    bad = (
        span_of(F2, [[1, 0, 0]]),
        span_of(F2, [[0, 1, 0]]),
        span_of(F2, [[1, 1, 0]]),
    )
    with pytest.raises(DegenerateFrame):
        apartment(bad)


def test_octahedron_counts():
    K3 = coned_octahedron(3)
    assert len(K3.simplices(0)) == 5 and len(K3.simplices(1)) == 8
    K4 = coned_octahedron(4)
    assert len(K4.simplices(2)) == 8 + 12
    K2 = coned_octahedron(2)
    assert K2.dim == 0 and len(K2.simplices(0)) == 3
    M4 = octahedral_sphere(4)
    assert len(M4.maximal) == 8


def test_subdivision_of_an_edge():
    sd = barycentric_subdivision(AbstractComplex([(0, 1)]))
    assert len(sd.simplices(0)) == 3 and len(sd.simplices(1)) == 2


def test_subdivided_octahedron_top_count():
    sd = subdivided_octahedron(3)
    assert len(sd.simplices(1)) == 16
    sd4 = subdivided_octahedron(4)
    assert len(sd4.simplices(2)) == (8 + 12) * 6


def test_subdivision_preserves_euler_characteristic():
    rnd = random.Random(7)
    for _ in range(12):
        nv = rnd.randint(2, 6)
        maximal = [
            tuple(rnd.sample(range(nv), rnd.randint(1, min(4, nv))))
            for _ in range(rnd.randint(1, 5))
        ]
        X = AbstractComplex(maximal)
        sd = barycentric_subdivision(X)
        assert X.euler_characteristic_reduced() == sd.euler_characteristic_reduced()


def test_tail_sequence_counts():
    assert len(list(tail_sequences(F2, 3))) == 3
    assert len(list(tail_sequences(F2, 4))) == 21
    assert len(list(tail_sequences(F3, 3))) == 16
    for v in tail_sequences(F3, 3):
        assert is_tail_sequence(F3, v)


def test_flag_map_vertex_image():
    X = BuildingComplex(F2, 3)
    v = next(tail_sequences(F2, 3))
    fm = FlagMap(X, v)
    img = fm.vertex_image((("a", 1, 1), ("a", 2, 1)))
    assert img == span_of(F2, np.stack([v[0], v[1]])).perp()
    assert img.dim == 1


def test_flag_map_images_are_flags_for_all_tails():
    X = BuildingComplex(F2, 3)
    sd = subdivided_octahedron(3)
    for v in tail_sequences(F2, 3):
        fm = FlagMap(X, v)
        for s in sd.simplices(1):
            flag = fm.image_flag(s)
            assert isinstance(flag, FlagSimplex) and flag.dims == (1, 2)


def test_flag_map_rejects_non_tail():
    X = BuildingComplex(F2, 3)
    bad = np.array([[1, 0, 0], [0, 1, 1]], dtype=np.uint8)  # v_1 = e_1 forbidden
    with pytest.raises(NotATailSequence):
        FlagMap(X, bad)


def test_abstract_complex_normalizes_maximal():
    X = AbstractComplex([(0, 1, 2), (0, 1), (3,)])
    assert X.maximal == [(0, 1, 2), (3,)]
    assert X.dim == 2
    assert X.simplices(1) == [(0, 1), (0, 2), (1, 2)]
