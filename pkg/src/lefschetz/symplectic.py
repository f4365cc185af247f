"""The symplectic side of twisting: transvections on surface homology,
exact products over the integers, and breadth-first closures of the
groups those products generate modulo a prime.

A twist about a curve of class c acts on first homology by the
transvection  x -> x + <x, c> c.  With the pairing fixed block diagonal
this is the integer matrix  I - c c^T J,  which is symplectic and
unipotent.  Everything in this module works for arbitrary genus; only
the closure routines assume the matrices fit their packed encoding and
fall back to a plain set of byte strings when they do not.
"""

from __future__ import annotations

from dataclasses import dataclass
from collections.abc import Sequence

from . import intlinalg
from .intlinalg import Matrix, Vector, mat_mul, mat_vec
from .surface import algebraic_intersection, intersection_matrix


def transvection(c: Sequence[int], power: int = 1) -> Matrix:
    """Matrix of the ``power``-th iterate of the transvection along c."""
    n = len(c)
    if n % 2:
        raise ValueError("homology vectors have even length")
    j = intersection_matrix(n // 2)
    jc = mat_vec(j, c)
    return tuple(
        tuple(
            (1 if i == k else 0) + power * c[i] * jc[k] for k in range(n)
        )
        for i in range(n)
    )


def is_symplectic(m: Sequence[Sequence[int]]) -> bool:
    n = len(m)
    if n % 2 or any(len(row) != n for row in m):
        return False
    j = intersection_matrix(n // 2)
    mt = intlinalg.transpose(m)
    return mat_mul(mat_mul(mt, j), m) == j


def evaluate_classes(classes: Sequence[Sequence[int]], rank: int) -> Matrix:
    """Composite transvection for a list of twist classes applied in
    order: the first class acts first."""
    total = intlinalg.identity_matrix(rank)
    for c in classes:
        total = mat_mul(transvection(c), total)
    return total


def symplectic_group_order(genus: int, p: int) -> int:
    """Order of Sp(2g, Z/p)."""
    g = genus
    order = p ** (g * g)
    for i in range(1, g + 1):
        order *= p ** (2 * i) - 1
    return order


@dataclass(frozen=True)
class ClosureReport:
    prime: int
    genus: int
    order: int
    full_group_order: int

    @property
    def is_full(self) -> bool:
        return self.order == self.full_group_order


def _closure_numpy(gens, p: int, dim: int) -> int:
    import numpy as np

    # Pack a matrix into one uint64: base-p digits in row major order.
    weights = (p ** np.arange(dim * dim, dtype=np.uint64)).astype(np.uint64)

    def encode(batch):
        flat = batch.reshape(len(batch), dim * dim).astype(np.uint64)
        return (flat * weights).sum(axis=1)

    gen_arr = np.array(gens, dtype=np.int64) % p
    gen_arr = gen_arr.astype(np.uint16)
    frontier = np.eye(dim, dtype=np.uint16)[None, :, :]
    seen = encode(frontier)
    while frontier.size:
        batches = []
        for k in range(len(gen_arr)):
            prod = (frontier.astype(np.uint32) @ gen_arr[k].astype(np.uint32)) % p
            batches.append(prod.astype(np.uint16))
        nxt = np.concatenate(batches)
        keys = encode(nxt)
        keys, first_idx = np.unique(keys, return_index=True)
        nxt = nxt[first_idx]
        fresh = ~np.isin(keys, seen, assume_unique=False)
        nxt = nxt[fresh]
        if not len(nxt):
            break
        seen = np.union1d(seen, keys[fresh])
        frontier = nxt
    return int(len(seen))


def _closure_sets(gens, p: int, dim: int) -> int:
    reduced = [intlinalg.mat_mod(g, p) for g in gens]
    ident = intlinalg.identity_matrix(dim)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in reduced:
                prod = intlinalg.mat_mod(mat_mul(m, g), p)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return len(seen)


def mod_p_closure(
    generators: Sequence[Sequence[Sequence[int]]], p: int
) -> ClosureReport:
    """Size of the subgroup of Sp(2g, Z/p) generated by the given
    integer matrices.

    The walk is level synchronous from the identity, multiplying each
    frontier element by every generator; since the ambient group is
    finite, the monoid closure reached this way is the full subgroup.
    """
    if not generators:
        raise ValueError("need at least one generator")
    if p not in (2, 3, 5):
        raise ValueError("closure primes are limited to 2, 3, and 5")
    dim = len(generators[0][0])
    if dim != 4:
        raise ValueError("closures are supported for genus 2 only")
    if p ** (dim * dim) < 2**63:
        order = _closure_numpy(generators, p, dim)
    else:
        order = _closure_sets(generators, p, dim)
    return ClosureReport(p, dim // 2, order, symplectic_group_order(dim // 2, p))


@dataclass(frozen=True)
class TransitivityCertificate:
    """Closure reports over a set of primes, with the only verdicts the
    finite quotients can support.

    Surjectivity onto every tested quotient of Sp(4, Z) is a necessary
    condition for the monodromy to hit the whole mapping class group, so
    a full sweep reads "consistent with transitive" and never more than
    that.  A proper subgroup at any prime exhibits a proper homological
    image, which rules transitivity out.
    """

    entries: tuple[ClosureReport, ...]

    @property
    def verdict(self) -> str:
        if all(e.is_full for e in self.entries):
            return "consistent with transitive"
        return "provably not transitive"

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(e.prime for e in self.entries)


def transitivity_certificate(
    generators: Sequence[Sequence[Sequence[int]]],
    primes: Sequence[int] = (2, 3, 5),
) -> TransitivityCertificate:
    """Run the mod-p closure at each prime and bundle the reports."""
    return TransitivityCertificate(
        tuple(mod_p_closure(generators, p) for p in primes)
    )


def vector_orbit(
    generators: Sequence[Sequence[Sequence[int]]], start: Sequence[int], p: int
) -> set[tuple[int, ...]]:
    """Orbit of a vector mod p under the group the generators produce."""
    reduced = [intlinalg.mat_mod(g, p) for g in generators]
    v0 = tuple(x % p for x in start)
    seen = {v0}
    frontier = [v0]
    while frontier:
        nxt = []
        for v in frontier:
            for m in reduced:
                w = tuple(x % p for x in mat_vec(m, v))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return seen


def acts_transitively_mod_p(
    generators: Sequence[Sequence[Sequence[int]]], p: int
) -> bool:
    """Whether the generated group moves the first basis vector onto
    every nonzero vector of (Z/p)^2g."""
    dim = len(generators[0][0])
    e1 = (1,) + (0,) * (dim - 1)
    return len(vector_orbit(generators, e1, p)) == p**dim - 1
