"""
Permutations of {1..m}, stored internally as 0-based image tuples.

The product convention throughout the package is function composition with the
*rightmost* factor applied first: ``compose(a, b)[i] = a[b[i]]``.  A generator
word maps to the left-to-right fold of its letters under this product, so the
word-to-permutation map is a homomorphism.
"""

from __future__ import annotations

import dataclasses
from typing import Sequence

Perm = tuple[int, ...]


def identity(m: int) -> Perm:
    return tuple(range(m))


def transposition(m: int, i: int) -> Perm:
    """The adjacent transposition swapping points i and i+1 (1-based, 1 <= i < m)."""
    if not 1 <= i <= m - 1:
        raise ValueError(f"transposition index {i} out of range for m={m}")
    p = list(range(m))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def compose(a: Perm, b: Perm) -> Perm:
    """a after b."""
    return tuple(a[x] for x in b)


def inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def longest(m: int) -> Perm:
    """The order-reversing permutation i -> m+1-i."""
    return tuple(range(m - 1, -1, -1))


def inversions(a: Perm) -> int:
    """Coxeter length of the permutation."""
    return sum(1 for i in range(len(a)) for j in range(i + 1, len(a)) if a[i] > a[j])


def is_permutation(images: Sequence[int]) -> bool:
    return sorted(images) == list(range(len(images)))


@dataclasses.dataclass(frozen=True)
class FinitePermutation:
    """A bijection of {1..m}, held in one-line notation."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {self.images}")

    @classmethod
    def from_zero_based(cls, p: Perm) -> "FinitePermutation":
        return cls(tuple(x + 1 for x in p))

    def to_zero_based(self) -> Perm:
        return tuple(x - 1 for x in self.images)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "FinitePermutation") -> "FinitePermutation":
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        return FinitePermutation.from_zero_based(
            compose(self.to_zero_based(), other.to_zero_based())
        )

    def inv(self) -> "FinitePermutation":
        return FinitePermutation.from_zero_based(inverse(self.to_zero_based()))

    def is_identity(self) -> bool:
        return all(x == i + 1 for i, x in enumerate(self.images))

    def one_line(self) -> str:
        return " ".join(str(x) for x in self.images)
