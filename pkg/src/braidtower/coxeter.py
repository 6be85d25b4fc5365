"""
Coxeter graphs of the three families in play, their defining relations, and
the projections onto the finite and affine symmetric groups.

Generator indexing follows the usual conventions: type A and type B
generators are 1-based (s1..sn, r1..rn), affine generators are 0-based
(t0..tn) with index arithmetic modulo n+1.
"""

from __future__ import annotations

import dataclasses
import enum
from typing import Sequence

from . import perms
from .perms import FinitePermutation


class Family(enum.Enum):
    TypeA = "A"
    TypeB = "B"
    AffineA = "affine-A"


@dataclasses.dataclass(frozen=True)
class CoxeterGraph:
    family: Family
    rank: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError("rank must be positive")
        if self.family is Family.AffineA and self.rank < 2:
            raise ValueError("the affine family is a cycle and needs rank >= 2")

    @property
    def generators(self) -> tuple[int, ...]:
        if self.family is Family.AffineA:
            return tuple(range(self.rank + 1))
        return tuple(range(1, self.rank + 1))

    def m(self, s: int, t: int) -> int:
        """Coxeter matrix entry; values here are always in {1, 2, 3, 4}."""
        gens = self.generators
        if s not in gens or t not in gens:
            raise ValueError(f"generator index out of range: {s}, {t}")
        if s == t:
            return 1
        if self.family is Family.AffineA:
            k = self.rank + 1
            return 3 if (s - t) % k in (1, k - 1) else 2
        if self.family is Family.TypeB and {s, t} == {self.rank - 1, self.rank}:
            return 4
        return 3 if abs(s - t) == 1 else 2


@dataclasses.dataclass(frozen=True)
class Relation:
    """A braid-type relation Pi(s,t,m) = Pi(t,s,m), stored as index words."""

    lhs: tuple[int, ...]
    rhs: tuple[int, ...]


def pi_word(a: int, b: int, m: int) -> tuple[int, ...]:
    """
    The alternating word abab... of length m, starting with a.

    >>> pi_word(1, 2, 3)
    (1, 2, 1)
    """
    if m < 2:
        raise ValueError(f"pi word needs m >= 2, got {m}")
    return tuple(a if i % 2 == 0 else b for i in range(m))


def relations(g: CoxeterGraph) -> list[Relation]:
    """One relation per unordered pair of distinct generators."""
    gens = g.generators
    rels = []
    for i, s in enumerate(gens):
        for t in gens[i + 1 :]:
            m = g.m(s, t)
            rels.append(Relation(pi_word(s, t, m), pi_word(t, s, m)))
    return rels


@dataclasses.dataclass(frozen=True)
class AffinePermutation:
    """
    An element of the affine symmetric group in window notation.

    The window holds [f(1), ..., f(n+1)]; the full bijection of the integers
    is determined by f(i + n+1) = f(i) + n+1.
    """

    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        k = self.n + 1
        if len(self.window) != k:
            raise ValueError(f"window must have length {k}")
        if len({x % k for x in self.window}) != k:
            raise ValueError("window residues mod n+1 must be pairwise distinct")
        if sum(self.window) != k * (k + 1) // 2:
            raise ValueError("window entries must sum to (n+1)(n+2)/2")

    @classmethod
    def identity(cls, n: int) -> "AffinePermutation":
        return cls(n, tuple(range(1, n + 2)))

    def __call__(self, j: int) -> int:
        """Evaluate the bijection at any integer through periodicity."""
        k = self.n + 1
        q, r = divmod(j - 1, k)
        return self.window[r] + q * k

    def __mul__(self, other: "AffinePermutation") -> "AffinePermutation":
        # Composition convention: (f * g)(i) = f(g(i)).
        if self.n != other.n:
            raise ValueError("rank mismatch")
        return AffinePermutation(self.n, tuple(self(other(j)) for j in range(1, self.n + 2)))

    def inv(self) -> "AffinePermutation":
        k = self.n + 1
        window = [0] * k
        for r in range(k):
            value = self.window[r]
            q, rr = divmod(value - 1, k)
            window[rr] = (r + 1) - q * k
        return AffinePermutation(self.n, tuple(window))

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 2))


def _affine_generator(n: int, i: int) -> AffinePermutation:
    k = n + 1
    window = list(range(1, k + 1))
    if i == 0:
        window[0] = 0
        window[k - 1] = k + 1
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return AffinePermutation(n, tuple(window))


def coxeter_project(
    w: Sequence[tuple[int, int]], g: CoxeterGraph
) -> FinitePermutation | AffinePermutation:
    """
    Image of a generator word in the Coxeter group of g.

    The word is a sequence of (index, exponent) pairs; exponents only matter
    mod 2 since Coxeter generators are involutions.  Type B is not supported:
    no operation in scope consumes signed permutations.
    """
    if g.family is Family.TypeB:
        raise ValueError("projection to the type-B Coxeter group is not implemented")
    gens = set(g.generators)
    if g.family is Family.TypeA:
        m = g.rank + 1
        acc = perms.identity(m)
        for index, exponent in w:
            if index not in gens:
                raise ValueError(f"unknown generator index {index}")
            if exponent % 2:
                acc = perms.compose(acc, perms.transposition(m, index))
        return FinitePermutation.from_zero_based(acc)
    acc = AffinePermutation.identity(g.rank)
    for index, exponent in w:
        if index not in gens:
            raise ValueError(f"unknown generator index {index}")
        if exponent % 2:
            acc = acc * _affine_generator(g.rank, index)
    return acc


def affine_in_finite_parabolic(a: AffinePermutation) -> bool:
    """
    Whether the element lies in the finite parabolic generated by t1..tn,
    i.e. whether the window is a plain permutation of {1..n+1}.
    """
    return sorted(a.window) == list(range(1, a.n + 2))
