import pytest

from lefschetz import freegroup as fg


def test_free_reduce():
    assert fg.free_reduce([1, -1]) == ()
    assert fg.free_reduce([1, 2, -2, -1, 3]) == (3,)
    assert fg.free_reduce([1, 2, 3]) == (1, 2, 3)


def test_inverse_and_concat():
    w = (1, 2, -3)
    assert fg.inverse(w) == (3, -2, -1)
    assert fg.concat(w, fg.inverse(w)) == ()
    assert fg.concat((1,), (2,), (3,)) == (1, 2, 3)


def test_conjugate_and_commutator():
    assert fg.conjugate((1,), (2,)) == (2, 1, -2)
    assert fg.commutator((1,), (2,)) == (1, 2, -1, -2)
    assert fg.commutator((1,), (1,)) == ()


def test_cyclic_normal_form_and_same_loop():
    assert fg.cyclic_reduce((2, 1, -2)) == (1,)
    assert fg.same_loop((1, 2), (2, 1))
    assert fg.same_loop((3, 1, 2, -3), (1, 2))
    assert not fg.same_loop((1, 2), (1, -2))


def test_abelianize():
    assert fg.abelianize((1, 2, -1, -2), 2) == (0, 0)
    assert fg.abelianize((1, 1, 3), 4) == (2, 0, 1, 0)


def test_boundary_word():
    assert fg.boundary_word(1) == (1, 2, -1, -2)
    assert fg.boundary_word(2) == (1, 2, -1, -2, 3, 4, -3, -4)
    assert fg.abelianize(fg.boundary_word(2), 4) == (0, 0, 0, 0)


def test_identity_endo_and_apply():
    e = fg.identity_endo(4)
    assert fg.is_identity(e)
    assert fg.apply_endo(e, (1, -3, 2)) == (1, -3, 2)


def test_compose_order():
    # compose(outer, inner) applies the inner map first
    rank = 2
    swap = ((2,), (1,))
    bump = ((1, 2), (2,))
    both = fg.compose(bump, swap)
    assert fg.apply_endo(both, (1,)) == fg.apply_endo(bump, fg.apply_endo(swap, (1,)))


def test_twist_endos_fix_homology_classes_correctly():
    # a twist about a curve adds that curve's class to transverse classes
    e = fg.twist_endo("c1")
    assert fg.abelianize(fg.apply_endo(e, (2,)), 4) == (1, 1, 0, 0)
    assert fg.apply_endo(e, (3,)) == (3,)
    e = fg.twist_endo("s1")
    for letter in (1, 2):
        assert fg.abelianize(fg.apply_endo(e, (letter,)), 4)[:2] == \
            fg.abelianize((letter,), 4)[:2]


def test_twist_endo_inverse_composes_to_identity():
    for label in fg.TWIST_LABELS:
        e = fg.compose(fg.twist_endo(label), fg.twist_endo(label, -1))
        assert fg.is_identity(e)


def test_twist_endos_preserve_boundary_word():
    # automorphisms of the closed-surface group fix the relator up to
    # conjugacy; the standard twists fix it on the nose or by conjugation
    relator = fg.boundary_word(2)
    for label in fg.TWIST_LABELS:
        image = fg.apply_endo(fg.twist_endo(label), relator)
        assert fg.same_loop(image, relator)


def test_braid_relation_for_adjacent_twists():
    # adjacent chain twists satisfy aba = bab
    a = fg.twist_endo("c1")
    b = fg.twist_endo("c2")
    aba = fg.compose(a, fg.compose(b, a))
    bab = fg.compose(b, fg.compose(a, b))
    assert aba == bab


def test_disjoint_twists_commute():
    a = fg.twist_endo("c1")
    b = fg.twist_endo("c4")
    assert fg.compose(a, b) == fg.compose(b, a)


def test_is_inner():
    rank = 4
    conj = (1, 2)
    inner = tuple(
        fg.free_reduce(conj + (i,) + fg.inverse(conj)) for i in range(1, rank + 1)
    )
    assert fg.is_inner(inner) == (1, 2)
    assert fg.is_inner(fg.identity_endo(rank)) == ()
    assert fg.is_inner(fg.twist_endo("c1")) is None


def test_twist_endo_rejects_unknown_label():
    with pytest.raises(ValueError):
        fg.twist_endo("c9")
