import pytest

from lefschetz.surface import (
    algebraic_intersection,
    intersection_matrix,
    standard_surface,
)


def test_intersection_matrix_is_standard_symplectic():
    m = intersection_matrix(2)
    assert len(m) == 4
    assert m[0][1] == -1 and m[1][0] == 1
    assert m[2][3] == -1 and m[3][2] == 1
    for i in range(4):
        assert m[i][i] == 0
        for j in range(4):
            assert m[i][j] == -m[j][i]


def test_algebraic_intersection_bilinear():
    a1 = (1, 0, 0, 0)
    b1 = (0, 1, 0, 0)
    assert algebraic_intersection(a1, b1) == -1
    assert algebraic_intersection(b1, a1) == 1
    assert algebraic_intersection(a1, a1) == 0
    assert algebraic_intersection((1, 0, 1, 0), (0, 1, 0, 1)) == -2


def test_standard_surface_labels():
    s = standard_surface(2)
    assert s.rank == 4
    assert s.chain_labels == ("c1", "c2", "c3", "c4", "c5")
    assert s.separating_labels == ("s1",)
    assert s.labels == ("c1", "c2", "c3", "c4", "c5", "s1")


def test_standard_surface_classes():
    s = standard_surface(2)
    assert s.class_of("c1") == (1, 0, 0, 0)
    assert s.class_of("c2") == (0, 1, 0, 0)
    assert s.class_of("c3") == (1, 0, 1, 0)
    assert s.class_of("c4") == (0, 0, 0, 1)
    assert s.class_of("c5") == (0, 0, 1, 0)
    assert s.class_of("s1") == (0, 0, 0, 0)


def test_chain_curve_classes_intersect_like_a_chain():
    s = standard_surface(2)
    chain = [s.class_of(label) for label in s.chain_labels]
    for i, u in enumerate(chain):
        for j, v in enumerate(chain):
            expected = 1 if j == i + 1 else -1 if j == i - 1 else 0
            assert abs(algebraic_intersection(u, v)) == abs(expected)


def test_genus_three_has_seven_chain_curves():
    s = standard_surface(3)
    assert len(s.chain_labels) == 7
    assert s.separating_labels == ("s1", "s2")
    assert len(s.class_of("c1")) == 6


def test_genus_zero_rejected():
    with pytest.raises(ValueError):
        standard_surface(0)
