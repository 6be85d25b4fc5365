"""
braidtower: the braid-group tower A[A_n] -> A[affine A_n] -> A[B_{n+1}]
-> A[A_{n+1}], Garside normal forms, the endomorphism families of the
affine-type group, and mechanical verification of their classification.
"""

from .coxeter import AffinePermutation, CoxeterGraph, Family, Relation, relations
from .endo import (
    AutStarElement,
    Certificate,
    GenImageHom,
    InvariantReport,
    alpha,
    autstar,
    beta,
    certificate_check,
    certified_hom,
    compose_hom,
    conjugate_hom,
    conjugator_search,
    cyclic_hom,
    hom_equal,
    identity_hom,
    invariant_screen,
    noninjectivity_witness,
    prop41_hom,
    prop22_distinguishers,
    verify_hom,
)
from .freeaction import BudgetExceededError, FreeAutomorphism, artin_action, equals_oracle
from .garside import BraidWord, NormalForm, SimpleElement, delta_word, equals, normal_form
from .perms import FinitePermutation
from .selftest import run_selftest
from .tower import (
    AffineElement,
    BElement,
    distinguished,
    iota_B,
    iota_Y,
    iota_affine,
    kent_peifer_check,
    lemma_delta_check,
    membership,
    split_b_element,
    z_value,
)
from .words import WordParseError, format_word, parse_word

__version__ = "0.1.0"
