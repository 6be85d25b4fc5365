"""
Words and left-weighted Garside normal forms in the braid group on m strands.

A braid is represented as Delta^inf f1 ... fk where the fi are permutation
braids (simple elements), no fi is trivial or Delta, and each consecutive
pair is left-weighted: F(fi) contains S(fi+1), where S(x) is the set of
generators that can start x and F(x) the set that can finish it.  Identity
of normal forms solves the word problem.

Permutation conventions come from perms: a word maps to the left-to-right
product of its letter transpositions, so for a simple element with
permutation x,

    S(x) = { i : x^-1(i) > x^-1(i+1) }      (left descents)
    F(x) = { i : x(i) > x(i+1) }            (right descents)

Negative letters are handled by rewriting sigma_i^-1 = Delta^-1 (Delta
sigma_i^-1) and pushing the Delta powers to the front through the
order-reversing conjugation.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Iterable

from . import perms
from .perms import FinitePermutation, Perm


def _merge_letters(letters: Iterable[tuple[int, int]]) -> tuple[tuple[int, int], ...]:
    merged: list[tuple[int, int]] = []
    for index, exponent in letters:
        if exponent == 0:
            continue
        if merged and merged[-1][0] == index:
            combined = merged[-1][1] + exponent
            merged.pop()
            if combined != 0:
                merged.append((index, combined))
        else:
            merged.append((index, exponent))
    return tuple(merged)


@dataclasses.dataclass(frozen=True)
class BraidWord:
    """A word in the generators sigma_1 .. sigma_{m-1} of the m-strand braid group."""

    strands: int
    letters: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.strands < 2:
            raise ValueError("need at least 2 strands")
        for index, exponent in self.letters:
            if not 1 <= index <= self.strands - 1:
                raise ValueError(f"generator index {index} out of range")
            if exponent == 0:
                raise ValueError("zero exponent stored in word")
        object.__setattr__(self, "letters", _merge_letters(self.letters))

    @classmethod
    def make(cls, strands: int, letters: Iterable[tuple[int, int]]) -> "BraidWord":
        return cls(strands, tuple(letters))

    @classmethod
    def empty(cls, strands: int) -> "BraidWord":
        return cls(strands, ())

    def is_empty(self) -> bool:
        return not self.letters

    def is_positive(self) -> bool:
        return all(e > 0 for _, e in self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.letters)


def concat(*ws: BraidWord) -> BraidWord:
    """Free-reduced concatenation."""
    if not ws:
        raise ValueError("concat needs at least one word")
    strands = ws[0].strands
    letters: list[tuple[int, int]] = []
    for w in ws:
        if w.strands != strands:
            raise ValueError("strand count mismatch")
        for index, exponent in w.letters:
            if letters and letters[-1][0] == index:
                combined = letters[-1][1] + exponent
                letters.pop()
                if combined != 0:
                    letters.append((index, combined))
            else:
                letters.append((index, exponent))
    return BraidWord(strands, tuple(letters))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple((i, -e) for i, e in reversed(w.letters)))


def conjugate(g: BraidWord, w: BraidWord) -> BraidWord:
    """g w g^-1."""
    return concat(g, w, invert(g))


def power(w: BraidWord, k: int) -> BraidWord:
    if k < 0:
        return power(invert(w), -k)
    result = BraidWord.empty(w.strands)
    for _ in range(k):
        result = concat(result, w)
    return result


def exponent_sum(w: BraidWord) -> int:
    return sum(e for _, e in w.letters)


def delta_word(m: int) -> BraidWord:
    """The half-twist word (s1..s_{m-1})(s1..s_{m-2})...(s1 s2) s1."""
    if m < 2:
        raise ValueError("need at least 2 strands")
    letters = []
    for top in range(m - 1, 0, -1):
        letters.extend((i, 1) for i in range(1, top + 1))
    return BraidWord(m, tuple(letters))


def underlying_permutation(w: BraidWord) -> FinitePermutation:
    """Image of the word under the projection onto the symmetric group."""
    acc = perms.identity(w.strands)
    for index, exponent in w.letters:
        if exponent % 2:
            acc = perms.compose(acc, perms.transposition(w.strands, index))
    return FinitePermutation.from_zero_based(acc)


# Permutation-level machinery.  All functions take 0-based image tuples; the
# strand count is implicit in the tuple length.  Results are memoized since
# structured computations revisit the same factor pairs constantly.


def _starting_set(x: Perm) -> frozenset[int]:
    inv = perms.inverse(x)
    return frozenset(i for i in range(1, len(x)) if inv[i - 1] > inv[i])


def _finishing_set(x: Perm) -> frozenset[int]:
    return frozenset(i for i in range(1, len(x)) if x[i - 1] > x[i])


starting_set = functools.lru_cache(maxsize=None)(_starting_set)
finishing_set = functools.lru_cache(maxsize=None)(_finishing_set)


@functools.lru_cache(maxsize=None)
def _meet(a: Perm, b: Perm) -> Perm:
    """Greatest common left divisor of two simple elements."""
    m = len(a)
    w = perms.identity(m)
    while True:
        common = starting_set(a) & starting_set(b)
        if not common:
            return w
        t = perms.transposition(m, min(common))
        w = perms.compose(w, t)
        a = perms.compose(t, a)
        b = perms.compose(t, b)


@functools.lru_cache(maxsize=None)
def _rebalance(a: Perm, b: Perm) -> tuple[Perm, Perm]:
    """
    Left-weighted recombination of an adjacent factor pair: move the largest
    simple prefix of b that still fits past a across the junction.
    """
    m = len(a)
    complement = perms.compose(perms.inverse(a), perms.longest(m))
    t = _meet(complement, b)
    if t == perms.identity(m):
        return a, b
    return perms.compose(a, t), perms.compose(perms.inverse(t), b)


def _is_left_weighted(a: Perm, b: Perm) -> bool:
    return starting_set(b) <= finishing_set(a)


def _flip(x: Perm) -> Perm:
    """Conjugation by Delta: maps sigma_i to sigma_{m-i}."""
    w0 = perms.longest(len(x))
    return perms.compose(w0, perms.compose(x, w0))


def _word_to_factors(w: BraidWord) -> tuple[int, list[Perm]]:
    """
    Rewrite the word as Delta^d f1...fk with all fi simple (possibly trivial
    or Delta).  Positive letters are packed greedily into growing simples.
    """
    m = w.strands
    w0 = perms.longest(m)
    d = 0
    factors: list[Perm] = []
    for index, exponent in w.letters:
        if exponent > 0:
            t = perms.transposition(m, index)
            for _ in range(exponent):
                if factors and index not in finishing_set(factors[-1]):
                    factors[-1] = perms.compose(factors[-1], t)
                else:
                    factors.append(t)
        else:
            neg = perms.compose(w0, perms.transposition(m, index))
            for _ in range(-exponent):
                factors = [_flip(f) for f in factors]
                d -= 1
                factors.append(neg)
    return d, factors


@dataclasses.dataclass(frozen=True)
class SimpleElement:
    """A permutation braid: a positive braid where each strand pair crosses at most once."""

    strands: int
    permutation: FinitePermutation

    def word(self) -> BraidWord:
        """Some positive word spelling the permutation braid."""
        x = self.permutation.to_zero_based()
        letters = []
        while True:
            s = starting_set(x)
            if not s:
                break
            i = min(s)
            letters.append((i, 1))
            x = perms.compose(perms.transposition(self.strands, i), x)
        return BraidWord(self.strands, tuple(letters))


@dataclasses.dataclass(frozen=True)
class NormalForm:
    """Left-weighted normal form Delta^inf f1 ... fk."""

    strands: int
    inf: int
    factors: tuple[SimpleElement, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def is_trivial(self) -> bool:
        return self.inf == 0 and not self.factors

    def to_word(self) -> BraidWord:
        parts = [power(delta_word(self.strands), self.inf)]
        parts.extend(f.word() for f in self.factors)
        return concat(*parts)

    def serialize(self) -> str:
        pieces = [f"D^{self.inf}"]
        pieces.extend(f.permutation.one_line() for f in self.factors)
        return " | ".join(pieces)


@functools.lru_cache(maxsize=None)
def normal_form(w: BraidWord) -> NormalForm:
    """
    The left-weighted normal form; two words represent the same braid iff
    their normal forms are identical.
    """
    m = w.strands
    ident = perms.identity(m)
    w0 = perms.longest(m)
    d, factors = _word_to_factors(w)
    changed = True
    while changed:
        changed = False
        for i in range(len(factors) - 1):
            a, b = factors[i], factors[i + 1]
            if b == ident or _is_left_weighted(a, b):
                continue
            factors[i], factors[i + 1] = _rebalance(a, b)
            changed = True
        if changed or any(f == ident for f in factors) or (factors and factors[0] == w0):
            factors = [f for f in factors if f != ident]
            while factors and factors[0] == w0:
                d += 1
                factors.pop(0)
    return NormalForm(
        m,
        d,
        tuple(SimpleElement(m, FinitePermutation.from_zero_based(f)) for f in factors),
    )


def equals(w1: BraidWord, w2: BraidWord) -> bool:
    """Whether the two words represent the same braid."""
    if w1.strands != w2.strands:
        raise ValueError("strand count mismatch")
    return normal_form(w1) == normal_form(w2)


def positive_parabolic_support(w: BraidWord, J: Iterable[int]) -> bool:
    """
    For a positive word w, whether w lies in the standard parabolic submonoid
    generated by the contiguous index set J.
    """
    J = sorted(set(J))
    if not J:
        return w.is_empty()
    if J != list(range(J[0], J[-1] + 1)):
        raise ValueError("J must be a contiguous generator-index set")
    if not all(1 <= j <= w.strands - 1 for j in J):
        raise ValueError("J out of range")
    if not w.is_positive() and not w.is_empty():
        raise ValueError("positive_parabolic_support requires a positive word")
    nf = normal_form(w)
    touched = set(range(J[0], J[-1] + 2))
    if nf.inf != 0 and touched != set(range(1, w.strands + 1)):
        return False
    for f in nf.factors:
        for point in range(1, w.strands + 1):
            if f.permutation(point) != point and point not in touched:
                return False
    return True
