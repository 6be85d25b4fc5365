from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidtower.garside import (
    BraidWord,
    delta_word,
    equals,
    exponent_sum,
    finishing_set,
    invert,
    normal_form,
    positive_parabolic_support,
    power,
    starting_set,
    underlying_permutation,
)
from braidtower.selftest import equivalent_rewrite, random_word


def test_letters_merge():
    w = BraidWord(3, ((1, 1), (1, 1), (2, 1), (2, -1), (1, -1)))
    assert w.letters == ((1, 1),)


def test_delta_length():
    assert len(delta_word(5)) == 10
    assert len(delta_word(3)) == 3


def test_delta_permutation_is_longest():
    assert underlying_permutation(delta_word(4)).images == (4, 3, 2, 1)


def test_nf_single_negative_letter():
    # worked example: sigma_1^-1 on 3 strands is Delta^-1 times the braid of [2 3 1]
    nf = normal_form(BraidWord(3, ((1, -1),)))
    assert nf.serialize() == "D^-1 | 2 3 1"
    assert equals(nf.to_word(), BraidWord(3, ((1, -1),)))


def test_nf_delta_power():
    # (s1 s2)^3 is the full twist
    w = power(BraidWord(3, ((1, 1), (2, 1))), 3)
    nf = normal_form(w)
    assert nf.inf == 2 and nf.factors == ()


def test_nf_frozen_example():
    w = BraidWord(4, ((1, 1), (3, -2), (2, 1), (1, -1), (3, 1), (2, 2)))
    assert normal_form(w).serialize() == "D^-2 | 3 4 2 1 | 4 1 3 2 | 2 4 3 1 | 1 3 2 4"


def test_braid_relations():
    assert equals(BraidWord(4, ((1, 1), (2, 1), (1, 1))), BraidWord(4, ((2, 1), (1, 1), (2, 1))))
    assert equals(BraidWord(4, ((1, 1), (3, 1))), BraidWord(4, ((3, 1), (1, 1))))
    assert not equals(BraidWord(4, ((1, 1),)), BraidWord(4, ((2, 1),)))


def test_inverse_cancels():
    w = BraidWord(5, ((1, 1), (3, -2), (2, 1), (4, 1)))
    assert normal_form(w * invert(w)).is_trivial()


def test_strand_mismatch():
    with pytest.raises(ValueError):
        equals(BraidWord(3, ()), BraidWord(4, ()))


def test_exponent_sum_invariant():
    rng = random.Random(7)
    for _ in range(50):
        w = random_word(rng, 5, 15)
        assert exponent_sum(normal_form(w).to_word()) == exponent_sum(w)


def test_left_weighted_chains():
    rng = random.Random(8)
    for _ in range(100):
        w = random_word(rng, 6, 20)
        nf = normal_form(w)
        for a, b in zip(nf.factors, nf.factors[1:]):
            assert starting_set(b.permutation.to_zero_based()) <= finishing_set(
                a.permutation.to_zero_based()
            )


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**30), st.integers(3, 6), st.integers(0, 18))
def test_rewrites_preserve_normal_form(seed, strands, length):
    rng = random.Random(seed)
    w = random_word(rng, strands, length)
    assert normal_form(equivalent_rewrite(w, rng)) == normal_form(w)


def test_parabolic_support():
    w = BraidWord(5, ((1, 2), (2, 1)))
    assert positive_parabolic_support(w, [1, 2])
    assert not positive_parabolic_support(w, [2, 3])
    assert positive_parabolic_support(BraidWord(5, ()), [])
    with pytest.raises(ValueError):
        positive_parabolic_support(w, [1, 3])
    with pytest.raises(ValueError):
        positive_parabolic_support(BraidWord(5, ((1, -1),)), [1, 2])
