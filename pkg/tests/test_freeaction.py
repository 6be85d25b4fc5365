from __future__ import annotations

import random

import pytest

from braidtower.freeaction import (
    BudgetExceededError,
    artin_action,
    equals_oracle,
    fixes_last_generator,
    format_free,
    free_inverse,
    reduce_free,
)
from braidtower.garside import BraidWord, equals, invert
from braidtower.selftest import equivalent_rewrite, random_word


def test_reduce_free():
    assert reduce_free([(1, 1), (1, -1), (2, 1)]) == ((2, 1),)
    assert free_inverse(((1, 1), (2, -1))) == ((2, 1), (1, -1))


def test_generator_rule():
    a = artin_action(BraidWord(3, ((1, 1),)))
    assert format_free(a.image_of(1)) == "x1 x2 x1^-1"
    assert a.image_of(2) == ((1, 1),)
    assert a.image_of(3) == ((3, 1),)


def test_frozen_composite_images():
    a = artin_action(BraidWord(3, ((1, 1), (2, 1))))
    assert format_free(a.image_of(1)) == "x1 x2 x1^-1"
    assert format_free(a.image_of(2)) == "x1 x3 x1^-1"
    assert format_free(a.image_of(3)) == "x1"


def test_inverse_letter_rule():
    w = BraidWord(4, ((2, 1),))
    composite = artin_action(w * invert(w))
    for gen in (1, 2, 3, 4):
        assert composite.image_of(gen) == ((gen, 1),)


def test_boundary_word_fixed():
    # every rule fixes x1 x2 ... xm
    rng = random.Random(3)
    boundary = tuple((g, 1) for g in range(1, 6))
    for _ in range(20):
        a = artin_action(random_word(rng, 5, 12))
        assert a.apply(boundary) == boundary


def test_oracle_agrees_with_garside():
    rng = random.Random(4)
    for _ in range(60):
        w = random_word(rng, 5, 12)
        w2 = equivalent_rewrite(w, rng)
        assert equals_oracle(w, w2)
        assert equals_oracle(w, w2) == equals(w, w2)


def test_parabolic_membership():
    assert fixes_last_generator(BraidWord(4, ((1, 1), (2, -2))))
    assert not fixes_last_generator(BraidWord(4, ((3, 1),)))
    # sigma_3^2 is not in the parabolic missing sigma_3 either
    assert not fixes_last_generator(BraidWord(4, ((3, 2),)))


def test_budget(monkeypatch):
    monkeypatch.setenv("GT_BUDGET", "4")
    with pytest.raises(BudgetExceededError):
        artin_action(BraidWord(3, ((1, 1), (2, 1), (1, 1), (2, 1))))
    monkeypatch.setenv("GT_BUDGET", "1000000")
    artin_action(BraidWord(3, ((1, 1), (2, 1), (1, 1), (2, 1))))
