import pytest

from lefschetz.intlinalg import identity_matrix, is_identity_matrix, mat_mul
from lefschetz.surface import algebraic_intersection, standard_surface
from lefschetz.symplectic import (
    acts_transitively_mod_p,
    is_symplectic,
    mod_p_closure,
    symplectic_group_order,
    transitivity_certificate,
    transvection,
    vector_orbit,
)


def _chain_transvections():
    s = standard_surface(2)
    return [transvection(s.class_of(f"c{i}")) for i in range(1, 6)]


def test_transvection_is_symplectic():
    s = standard_surface(2)
    for label in s.labels:
        assert is_symplectic(transvection(s.class_of(label)))


def test_transvection_of_null_class_is_identity():
    assert is_identity_matrix(transvection((0, 0, 0, 0)))


def test_transvection_moves_transverse_class_by_pairing():
    s = standard_surface(2)
    ta = transvection(s.class_of("c1"))
    b1 = s.class_of("c2")
    image = tuple(
        sum(ta[i][j] * b1[j] for j in range(4)) for i in range(4)
    )
    pairing = algebraic_intersection(b1, s.class_of("c1"))
    expected = tuple(
        b1[i] + pairing * s.class_of("c1")[i] for i in range(4)
    )
    assert image == expected


def test_transvection_power_matches_repeated_product():
    s = standard_surface(2)
    c = s.class_of("c3")
    cubed = transvection(c, 3)
    step = transvection(c)
    assert cubed == mat_mul(step, mat_mul(step, step))
    assert mat_mul(transvection(c, -1), step) == identity_matrix(4)


def test_symplectic_group_orders():
    assert symplectic_group_order(1, 2) == 6
    assert symplectic_group_order(1, 3) == 24
    assert symplectic_group_order(2, 2) == 720
    assert symplectic_group_order(2, 3) == 51840


def test_chain_twists_generate_full_group_mod_two_and_three():
    gens = _chain_transvections()
    for p, order in ((2, 720), (3, 51840)):
        report = mod_p_closure(gens, p)
        assert report.order == order
        assert report.is_full


def test_single_twist_generates_a_proper_subgroup():
    s = standard_surface(2)
    report = mod_p_closure([transvection(s.class_of("c1"))], 2)
    assert report.order == 2
    assert not report.is_full


def test_transitivity_certificate_verdicts():
    full = transitivity_certificate(_chain_transvections(), primes=(2, 3))
    assert full.verdict == "consistent with transitive"
    assert full.primes == (2, 3)

    s = standard_surface(2)
    partial = transitivity_certificate(
        [transvection(s.class_of("c1"))], primes=(2,)
    )
    assert partial.verdict == "provably not transitive"


def test_mod_p_closure_rejects_bad_primes():
    gens = _chain_transvections()
    with pytest.raises(ValueError):
        mod_p_closure(gens, 7)
    with pytest.raises(ValueError):
        mod_p_closure([identity_matrix(6)], 2)


def test_vector_orbit_and_transitivity_on_nonzero_vectors():
    gens = _chain_transvections()
    orbit = vector_orbit(gens, (1, 0, 0, 0), 2)
    assert len(orbit) == 15
    assert acts_transitively_mod_p(gens, 2)
    s = standard_surface(2)
    assert not acts_transitively_mod_p([transvection(s.class_of("c1"))], 2)
