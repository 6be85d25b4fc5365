"""
The classical faithful action of the m-strand braid group on a rank-m free
group, used as an independent word-problem oracle and as the membership
decider for the standard parabolic subgroup missing the last generator.

Generator rule: sigma_i sends x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, and
fixes the other free generators.  Every rule fixes the boundary word
x_1 x_2 ... x_m.

Images of long braids can grow exponentially, so reduced word lengths are
capped by a budget (default 10^6, override with the GT_BUDGET environment
variable); exceeding it raises BudgetExceededError.
"""

from __future__ import annotations

import dataclasses
import os

from .garside import BraidWord

DEFAULT_BUDGET = 10**6

FreeWord = tuple[tuple[int, int], ...]  # (generator index 1..m, sign +-1)


class BudgetExceededError(RuntimeError):
    pass


def _budget() -> int:
    raw = os.environ.get("GT_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def reduce_free(letters) -> FreeWord:
    """Freely reduce a sequence of (index, sign) pairs."""
    stack: list[tuple[int, int]] = []
    for gen, sign in letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((gen, sign))
    return tuple(stack)


def free_inverse(w: FreeWord) -> FreeWord:
    return tuple((g, -s) for g, s in reversed(w))


def format_free(w: FreeWord) -> str:
    return " ".join(f"x{g}" if s == 1 else f"x{g}^-1" for g, s in w)


def _apply_letter(index: int, sign: int, word: FreeWord, budget: int) -> FreeWord:
    """Substitute the sigma_index^sign rule into a free word and reduce."""
    i, j = index, index + 1
    out: list[tuple[int, int]] = []

    def push(gen: int, s: int):
        if out and out[-1][0] == gen and out[-1][1] == -s:
            out.pop()
        else:
            out.append((gen, s))

    for gen, s in word:
        if sign == 1:
            if gen == i:
                pieces = ((i, 1), (j, 1), (i, -1)) if s == 1 else ((i, 1), (j, -1), (i, -1))
            elif gen == j:
                pieces = ((i, s),)
            else:
                pieces = ((gen, s),)
        else:
            if gen == i:
                pieces = ((j, s),)
            elif gen == j:
                pieces = ((j, -1), (i, 1), (j, 1)) if s == 1 else ((j, -1), (i, -1), (j, 1))
            else:
                pieces = ((gen, s),)
        for g, ss in pieces:
            push(g, ss)
        if len(out) > budget:
            raise BudgetExceededError(f"free word exceeded budget of {budget} letters")
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class FreeAutomorphism:
    """An automorphism of the rank-m free group, given by generator images."""

    rank: int
    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, rank: int) -> "FreeAutomorphism":
        return cls(rank, tuple(((g, 1),) for g in range(1, rank + 1)))

    def image_of(self, gen: int) -> FreeWord:
        return self.images[gen - 1]

    def apply(self, word: FreeWord) -> FreeWord:
        budget = _budget()
        out: list[tuple[int, int]] = []
        for gen, sign in word:
            piece = self.images[gen - 1] if sign == 1 else free_inverse(self.images[gen - 1])
            for g, s in piece:
                if out and out[-1][0] == g and out[-1][1] == -s:
                    out.pop()
                else:
                    out.append((g, s))
            if len(out) > budget:
                raise BudgetExceededError(f"free word exceeded budget of {budget} letters")
        return tuple(out)


def artin_action(w: BraidWord) -> FreeAutomorphism:
    """The automorphism induced by the braid word."""
    budget = _budget()
    m = w.strands
    flat: list[tuple[int, int]] = []
    for index, exponent in w.letters:
        sign = 1 if exponent > 0 else -1
        flat.extend((index, sign) for _ in range(abs(exponent)))
    images = []
    for gen in range(1, m + 1):
        word: FreeWord = ((gen, 1),)
        # phi_w = phi_{l1} o ... o phi_{lk}: the last letter acts first.
        for index, sign in reversed(flat):
            word = _apply_letter(index, sign, word, budget)
        images.append(word)
    return FreeAutomorphism(m, tuple(images))


def equals_oracle(w1: BraidWord, w2: BraidWord) -> bool:
    """Word-problem oracle via faithfulness of the action."""
    if w1.strands != w2.strands:
        raise ValueError("strand count mismatch")
    return artin_action(w1) == artin_action(w2)


def fixes_last_generator(w: BraidWord) -> bool:
    """
    Whether the induced automorphism fixes x_m exactly.  This decides
    membership in the standard parabolic generated by sigma_1..sigma_{m-2}.
    """
    m = w.strands
    aut = artin_action(w)
    return aut.image_of(m) == ((m, 1),)
