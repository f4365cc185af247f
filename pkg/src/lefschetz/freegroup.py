"""Words in a finitely generated free group, and the twist action on the
fundamental group of a genus-2 surface.

A word is a tuple of nonzero ints: letter ``i > 0`` is the i-th generator
and ``-i`` its inverse.  For the genus-2 surface we fix the generators

    a1, b1, a2, b2  =  1, 2, 3, 4

coming from a one-holed model whose boundary reads off the product of
commutators ``a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1``.  Every twist
recorded below fixes that boundary word exactly, which is what makes the
tables usable for cut-open surface computations.

An endomorphism is stored by its generator images: a tuple of words,
entry ``i - 1`` holding the image of generator ``i``.  Everything here is
in fact an automorphism (twists along simple closed curves and their
compositions), but only :func:`is_inner` relies on that.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

Word = tuple[int, ...]
Endo = tuple[Word, ...]

GENUS2_RANK = 4


def free_reduce(letters: Iterable[int]) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for x in letters:
        if x == 0:
            raise ValueError("0 is not a letter")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def inverse(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def concat(*words: Sequence[int]) -> Word:
    glued: list[int] = []
    for w in words:
        glued.extend(w)
    return free_reduce(glued)


def conjugate(word: Sequence[int], by: Sequence[int]) -> Word:
    """Return ``by . word . by^-1``."""
    return concat(by, word, inverse(by))


def commutator(u: Sequence[int], v: Sequence[int]) -> Word:
    """Return ``u v u^-1 v^-1``."""
    return concat(u, v, inverse(u), inverse(v))


def cyclic_split(word: Sequence[int]) -> tuple[Word, Word]:
    """Split ``word`` as ``prefix . core . prefix^-1`` with ``core``
    cyclically reduced.  Returns ``(core, prefix)``."""
    w = free_reduce(word)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j], w[:i]


def cyclic_reduce(word: Sequence[int]) -> Word:
    return cyclic_split(word)[0]


def cyclic_normal_form(word: Sequence[int]) -> Word:
    """Lexicographically least rotation of the cyclic reduction."""
    w = cyclic_reduce(word)
    if not w:
        return w
    return min(w[i:] + w[:i] for i in range(len(w)))


def same_loop(u: Sequence[int], v: Sequence[int]) -> bool:
    """True when the two words trace the same unoriented free loop,
    i.e. agree up to conjugation and inversion."""
    nu = cyclic_normal_form(u)
    return nu == cyclic_normal_form(v) or nu == cyclic_normal_form(inverse(v))


def abelianize(word: Sequence[int], rank: int) -> tuple[int, ...]:
    """Exponent-sum vector of ``word`` over the first ``rank`` generators."""
    v = [0] * rank
    for x in word:
        g = abs(x)
        if g > rank:
            raise ValueError(f"letter {x} outside rank {rank}")
        v[g - 1] += 1 if x > 0 else -1
    return tuple(v)


def boundary_word(genus: int) -> Word:
    """Product of commutators [a1,b1]...[ag,bg] in the letters 1..2g."""
    if genus < 1:
        raise ValueError("genus must be at least 1")
    out: list[int] = []
    for h in range(genus):
        a, b = 2 * h + 1, 2 * h + 2
        out.extend((a, b, -a, -b))
    return tuple(out)


def identity_endo(rank: int) -> Endo:
    return tuple((i,) for i in range(1, rank + 1))


def apply_endo(images: Endo, word: Sequence[int]) -> Word:
    out: list[int] = []
    for x in word:
        piece = images[x - 1] if x > 0 else inverse(images[-x - 1])
        for y in piece:
            if out and out[-1] == -y:
                out.pop()
            else:
                out.append(y)
    return tuple(out)


def compose(outer: Endo, inner: Endo) -> Endo:
    """Images of ``outer . inner`` (inner applied first)."""
    return tuple(apply_endo(outer, im) for im in inner)


def compose_all(endos: Sequence[Endo], rank: int) -> Endo:
    """Compose left to right in application order: the first entry of
    ``endos`` acts first."""
    total = identity_endo(rank)
    for e in endos:
        total = compose(e, total)
    return total


def is_identity(images: Endo) -> bool:
    return all(im == (i + 1,) for i, im in enumerate(images))


def is_inner(images: Endo) -> Word | None:
    """If the automorphism is conjugation ``x -> w x w^-1``, return ``w``.

    The conjugator is pinned down from the image of the first generator:
    writing it as ``prefix . core . prefix^-1`` with cyclically reduced
    core, the core must be the generator itself and any valid ``w`` is
    ``prefix`` times a power of that generator.  The power is bounded by
    the total image length, so the search is finite.
    """
    rank = len(images)
    core, prefix = cyclic_split(images[0])
    if core != (1,):
        return None
    budget = sum(len(im) for im in images) + 2
    targets = list(images)
    for k in range(budget + 1):
        for signed in ((0,) if k == 0 else (k, -k)):
            tail = (1,) * signed if signed >= 0 else (-1,) * (-signed)
            w = concat(prefix, tail)
            wi = inverse(w)
            if all(
                concat(w, (g,), wi) == targets[g - 1]
                for g in range(1, rank + 1)
            ):
                return w
    return None


# Twist tables for the genus-2 surface group, generators a1, b1, a2, b2.
# Labels c1..c5 are the standard chain of simple closed curves
# (classes a1, b1, a1+a2, b2, a2) and s1 is the separating curve
# cutting off the first handle.  Sign +1 is the right-handed twist.
#
# The tables were derived in a fixed one-holed model and are pinned by
# the test suite: each one fixes the boundary word, inverse pairs
# compose to the identity, neighbours in the chain satisfy the braid
# relation, disjoint curves give commuting twists, and the induced maps
# on homology are the expected transvections.

_D = (2, 1, -2, -1)  # conjugator of the s1 twist on the first handle

TWIST_IMAGES: dict[tuple[str, int], Endo] = {
    ("c1", 1): ((1,), (2, 1), (3,), (4,)),
    ("c1", -1): ((1,), (2, -1), (3,), (4,)),
    ("c2", 1): ((1, -2), (2,), (3,), (4,)),
    ("c2", -1): ((1, 2), (2,), (3,), (4,)),
    ("c3", 1): (
        (-3, 1, 3),
        (-3, -1, 3, 1, 2, 1, 3),
        (-3, -1, 3, 1, 3),
        (4, 1, 3),
    ),
    ("c3", -1): (
        (1, 3, 1, -3, -1),
        (1, 3, -1, -3, 2, -3, -1),
        (1, 3, -1),
        (4, -3, -1),
    ),
    ("c4", 1): ((1,), (2,), (3, -4), (4,)),
    ("c4", -1): ((1,), (2,), (3, 4), (4,)),
    ("c5", 1): ((1,), (2,), (3,), (4, 3)),
    ("c5", -1): ((1,), (2,), (3,), (4, -3)),
    ("s1", 1): (
        conjugate((1,), _D),
        conjugate((2,), _D),
        (3,),
        (4,),
    ),
    ("s1", -1): (
        conjugate((1,), inverse(_D)),
        conjugate((2,), inverse(_D)),
        (3,),
        (4,),
    ),
}

TWIST_LABELS = ("c1", "c2", "c3", "c4", "c5", "s1")


def twist_endo(label: str, sign: int = 1) -> Endo:
    """Generator images of the twist about a standard genus-2 curve."""
    try:
        return TWIST_IMAGES[(label, sign)]
    except KeyError:
        raise ValueError(f"no genus-2 twist table for {label!r} sign {sign}")
