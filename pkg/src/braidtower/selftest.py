"""
Self-verification suite: every check the package promises, runnable at two
scales.  The quick profile trims ranks and parameter ranges; the full profile
runs the complete desk-scale verification.
"""

from __future__ import annotations

import random
import time
from typing import Callable

from . import coxeter, endo, freeaction, garside, tower
from .coxeter import CoxeterGraph, Family
from .garside import BraidWord, equals, normal_form

PROFILES = {
    "quick": {
        "embed_ranks": (2, 4),
        "lemma_ranks": (1, 2),
        "kp_ranks": (2, 4),
        "family_ranks": (2, 4),
        "p_range": (-1, 0, 1),
        "pq_range": (0, 1),
        "autstar_ranks": (4,),
        "prop22_ranks": (4,),
        "oracle_pairs": 150,
        "cert_instances": 20,
        "rewrite_pairs": 200,
    },
    "full": {
        "embed_ranks": (2, 3, 4, 5),
        "lemma_ranks": (1, 2, 3, 4),
        "kp_ranks": (2, 3, 4, 5),
        "family_ranks": (2, 4, 5),
        "p_range": (-3, -2, -1, 0, 1, 2, 3),
        "pq_range": (-1, 0, 1),
        "autstar_ranks": (4, 5),
        "prop22_ranks": (4, 5),
        "oracle_pairs": 1000,
        "cert_instances": 100,
        "rewrite_pairs": 1000,
    },
}


# Random words and equivalence-preserving rewrites, shared with the tests.


def random_word(rng: random.Random, strands: int, length: int) -> BraidWord:
    letters = [
        (rng.randint(1, strands - 1), rng.choice((1, -1))) for _ in range(length)
    ]
    return BraidWord.make(strands, letters)


def _flatten(w: BraidWord) -> list[tuple[int, int]]:
    units = []
    for index, exponent in w.letters:
        sign = 1 if exponent > 0 else -1
        units.extend((index, sign) for _ in range(abs(exponent)))
    return units


def equivalent_rewrite(w: BraidWord, rng: random.Random, ops: int = 8) -> BraidWord:
    """
    Rewrite the word by defining relations and free insertions at random
    positions; the result represents the same braid.
    """
    units = _flatten(w)
    m = w.strands
    for _ in range(ops):
        kind = rng.choice(("insert", "commute", "braid"))
        if kind == "insert":
            i = rng.randint(1, m - 1)
            s = rng.choice((1, -1))
            pos = rng.randint(0, len(units))
            units[pos:pos] = [(i, s), (i, -s)]
        elif kind == "commute":
            spots = [
                k
                for k in range(len(units) - 1)
                if abs(units[k][0] - units[k + 1][0]) >= 2
            ]
            if spots:
                k = rng.choice(spots)
                units[k], units[k + 1] = units[k + 1], units[k]
        else:
            spots = []
            for k in range(len(units) - 2):
                (a, sa), (b, sb), (c, sc) = units[k : k + 3]
                if sa == sb == sc and a == c and abs(a - b) == 1:
                    spots.append(k)
            if spots:
                k = rng.choice(spots)
                (a, s), (b, _), _ = units[k : k + 3]
                units[k : k + 3] = [(b, s), (a, s), (b, s)]
    return BraidWord.make(m, units)


# Individual checks.  Each returns (ok, detail).


def check_embeddings_preserve_relations(profile: dict) -> tuple[bool, str]:
    count = 0
    for n in profile["embed_ranks"]:
        for rel in coxeter.relations(CoxeterGraph(Family.TypeA, n)):
            lhs = tower.iota_Y([(i, 1) for i in rel.lhs], n).ambient
            rhs = tower.iota_Y([(i, 1) for i in rel.rhs], n).ambient
            if not equals(lhs, rhs):
                return False, f"iota_Y broke a relation at n={n}"
            count += 1
        for rel in coxeter.relations(CoxeterGraph(Family.TypeB, n + 1)):
            lhs = tower.iota_B([(i, 1) for i in rel.lhs], n).ambient
            rhs = tower.iota_B([(i, 1) for i in rel.rhs], n).ambient
            if not equals(lhs, rhs):
                return False, f"iota_B broke a relation at n={n}"
            count += 1
        for rel in coxeter.relations(CoxeterGraph(Family.AffineA, n)):
            lhs = tower.iota_affine([(i, 1) for i in rel.lhs], n).ambient
            rhs = tower.iota_affine([(i, 1) for i in rel.rhs], n).ambient
            if not equals(lhs, rhs):
                return False, f"iota_affine broke a relation at n={n}"
            count += 1
    return True, f"{count} relations preserved across all three embeddings"


def check_oracle_agreement(profile: dict) -> tuple[bool, str]:
    rng = random.Random(20240901)
    pairs = profile["oracle_pairs"]
    agree_true = agree_false = 0
    for k in range(pairs):
        strands = rng.randint(2, 7)
        w1 = random_word(rng, strands, rng.randint(0, 30))
        if k % 2 == 0:
            w2 = equivalent_rewrite(w1, rng)
        else:
            w2 = random_word(rng, strands, rng.randint(0, 30))
        g = equals(w1, w2)
        f = freeaction.equals_oracle(w1, w2)
        if g != f:
            return False, f"disagreement on pair {k} (strands={strands})"
        if g:
            agree_true += 1
        else:
            agree_false += 1
    return True, f"{pairs} pairs, {agree_true} equal / {agree_false} unequal, zero disagreements"


def check_lemma_delta(profile: dict) -> tuple[bool, str]:
    for n in profile["lemma_ranks"]:
        if not tower.lemma_delta_check(n):
            return False, f"half-twist square identity failed at n={n}"
    return True, f"verified for n in {profile['lemma_ranks']}"


def check_kent_peifer(profile: dict) -> tuple[bool, str]:
    for n in profile["kp_ranks"]:
        if not tower.kent_peifer_check(n):
            return False, f"splitting data failed at n={n}"
    return True, f"verified for n in {profile['kp_ranks']}"


def check_families_verify(profile: dict) -> tuple[bool, str]:
    count = 0
    for n in profile["family_ranks"]:
        for psi in endo.all_autstar(n):
            h = endo.autstar(psi.m, psi.e, psi.f, n)
            if not endo.verify_hom(h):
                return False, f"graph automorphism {psi} failed at n={n}"
            count += 1
        for p in profile["p_range"]:
            for fam in (endo.alpha, endo.beta):
                if not endo.verify_hom(fam(p, n)):
                    return False, f"{fam.__name__}_{p} failed at n={n}"
                count += 1
        conjugators = [
            None,
            tower.iota_affine(((0, 1),), n).ambient,
            tower.distinguished("rho", n).ambient,
        ]
        for family in ("u", "v"):
            for k in (0, 1):
                for eps in (1, -1):
                    for p in profile["pq_range"] if family == "v" else (0,):
                        for q in profile["pq_range"]:
                            for g in conjugators:
                                h = endo.prop41_hom(k, family, eps, p, q, g, n)
                                if not endo.verify_hom(h):
                                    return False, (
                                        f"family {family}{k} eps={eps} p={p} q={q} failed at n={n}"
                                    )
                                count += 1
    return True, f"{count} homomorphisms verified"


def check_autstar_structure(profile: dict) -> tuple[bool, str]:
    for n in profile["autstar_ranks"]:
        elements = endo.all_autstar(n)
        if len(elements) != 4 * (n + 1):
            return False, f"wrong canonical form count at n={n}"
        homs = [endo.autstar(psi.m, psi.e, psi.f, n) for psi in elements]
        for i in range(len(homs)):
            for j in range(i + 1, len(homs)):
                if endo.hom_equal(homs[i], homs[j]):
                    return False, f"canonical forms {i} and {j} coincide at n={n}"
        zeta = endo.autstar(1, 0, 0, n)
        eta = endo.autstar(0, 1, 0, n)
        mu = endo.autstar(0, 0, 1, n)
        ident = endo.identity_hom(n)
        laws = [
            (_hom_power(zeta, n + 1, n), ident),
            (endo.compose_hom(eta, eta), ident),
            (endo.compose_hom(endo.compose_hom(eta, zeta), eta), endo.autstar(-1, 0, 0, n)),
            (endo.compose_hom(mu, mu), ident),
            (endo.compose_hom(mu, zeta), endo.compose_hom(zeta, mu)),
            (endo.compose_hom(mu, eta), endo.compose_hom(eta, mu)),
        ]
        for lhs, rhs in laws:
            if not endo.hom_equal(lhs, rhs):
                return False, f"a group law failed at n={n}"
    return True, f"order 4(n+1), all laws verified for n in {profile['autstar_ranks']}"


def _hom_power(h, k: int, n: int):
    out = endo.identity_hom(n)
    for _ in range(k):
        out = endo.compose_hom(h, out)
    return out


def check_fix_y_identity(profile: dict) -> tuple[bool, str]:
    n = 4
    dy = tower.distinguished("delta_Y", n)
    zeta_eta = endo.autstar(1, 1, 0, n)
    fix = endo.conjugate_hom(dy, zeta_eta)
    for i in range(1, n + 1):
        if not equals(fix.image_word(i), tower.iota_affine(((i, 1),), n).ambient):
            return False, f"conj_DY zeta eta moves t{i}"
    for p in (-1, 0, 1):
        lhs = endo.compose_hom(fix, endo.alpha(p, n))
        if not endo.hom_equal(lhs, endo.alpha(p, n)):
            return False, f"the parabolic-fixing identity failed for p={p}"
    return True, "conj_DY zeta eta fixes the parabolic and stabilizes alpha_p"


def check_witnesses(profile: dict) -> tuple[bool, str]:
    n = 4
    t0 = tower.iota_affine(((0, 1),), n)
    if tower.membership(t0.ambient, "ay", n):
        return False, "t0 wrongly reported inside the parabolic"
    for p in (-1, 0, 1):
        for family in ("alpha", "beta"):
            endo.noninjectivity_witness(family, p, n)
            h = endo.alpha(p, n) if family == "alpha" else endo.beta(p, n)
            for i in range(n + 1):
                if not tower.membership(h.image_word(i), "ay", n):
                    return False, f"{family}_{p} image of t{i} left the parabolic"
    return True, "non-injectivity and non-surjectivity witnesses verified for p in {-1,0,1}"


def check_prop22(profile: dict) -> tuple[bool, str]:
    for n in profile["prop22_ranks"]:
        for p in profile["p_range"]:
            h = endo.alpha(p, n)
            if garside.exponent_sum(h.image_word(1)) != 1 + p * n * (n + 1):
                return False, f"exponent-sum formula failed at n={n}, p={p}"
            if endo.invariant_screen(h).candidate_p != p:
                return False, f"screen failed to recover p={p} at n={n}"
            if equals(h.image_word(0), endo.beta(p, n).image_word(0)):
                return False, f"alpha and beta coincide on t0 at n={n}, p={p}"
    return True, "exponent-sum arithmetic and family separation verified"


def _random_affine(rng: random.Random, n: int, length: int):
    letters = [(rng.randint(0, n), rng.choice((1, -1))) for _ in range(length)]
    return tower.iota_affine(letters, n)


def check_certificates(profile: dict) -> tuple[bool, str]:
    rng = random.Random(20240902)
    n = 4
    cases = ("autstar", "alpha", "beta", "cyclic")
    for trial in range(profile["cert_instances"]):
        g = _random_affine(rng, n, rng.randint(0, 12))
        psi = endo.AutStarElement(n, rng.randrange(n + 1), rng.randrange(2), rng.randrange(2))
        p = rng.randint(-2, 2)
        true_case = cases[trial % 4]
        if true_case == "cyclic":
            target = _random_affine(rng, n, rng.randint(0, 4))
            base = endo.cyclic_hom(target)
            true_cert = endo.Certificate("cyclic", conjugator=g, target=target)
        elif true_case == "autstar":
            base = endo.autstar(psi.m, psi.e, psi.f, n)
            true_cert = endo.Certificate("autstar", conjugator=g, psi=psi)
        else:
            fam = endo.alpha if true_case == "alpha" else endo.beta
            base = endo.compose_hom(endo.autstar(psi.m, psi.e, psi.f, n), fam(p, n))
            true_cert = endo.Certificate(true_case, conjugator=g, psi=psi, p=p)
        h = endo.conjugate_hom(g, base)
        if not endo.certificate_check(h, true_cert):
            return False, f"matching certificate rejected on trial {trial} ({true_case})"
        for other in cases:
            if other == true_case:
                continue
            if other == "cyclic":
                cert = endo.Certificate("cyclic", conjugator=g, target=h.images[0])
            elif other == "autstar":
                cert = endo.Certificate("autstar", conjugator=g, psi=psi)
            else:
                cert = endo.Certificate(other, conjugator=g, psi=psi, p=p)
            if endo.certificate_check(h, cert):
                return False, f"case {other} wrongly accepted on trial {trial} ({true_case})"
    return True, f"{profile['cert_instances']} instances, matching accepted, others rejected"


def check_canonicality(profile: dict) -> tuple[bool, str]:
    rng = random.Random(20240903)
    for k in range(profile["rewrite_pairs"]):
        strands = rng.randint(2, 6)
        w = random_word(rng, strands, rng.randint(0, 25))
        w2 = equivalent_rewrite(w, rng)
        nf = normal_form(w)
        if nf != normal_form(w2):
            return False, f"rewrite pair {k} got different normal forms"
        if normal_form(nf.to_word()) != nf:
            return False, f"round trip failed on pair {k}"
        for a, b in zip(nf.factors, nf.factors[1:]):
            if not garside.starting_set(b.permutation.to_zero_based()) <= garside.finishing_set(
                a.permutation.to_zero_based()
            ):
                return False, f"factor chain not left-weighted on pair {k}"
    return True, f"{profile['rewrite_pairs']} rewrite pairs canonical, round trips exact"


CHECKS: tuple[tuple[str, Callable[[dict], tuple[bool, str]]], ...] = (
    ("embeddings-preserve-relations", check_embeddings_preserve_relations),
    ("garside-free-action-agreement", check_oracle_agreement),
    ("half-twist-square-identity", check_lemma_delta),
    ("splitting-conjugation-data", check_kent_peifer),
    ("families-verify", check_families_verify),
    ("autstar-structure", check_autstar_structure),
    ("parabolic-fixing-identity", check_fix_y_identity),
    ("injectivity-witnesses", check_witnesses),
    ("exponent-sum-separation", check_prop22),
    ("certificate-soundness", check_certificates),
    ("normal-form-canonicality", check_canonicality),
)


def run_selftest(profile_name: str = "quick", corrupt: str | None = None) -> dict:
    """
    Run the whole suite; returns a report dict.  The corrupt hook forces the
    named check to fail, for harness sanity testing.
    """
    if profile_name not in PROFILES:
        raise ValueError(f"unknown profile {profile_name!r}")
    profile = PROFILES[profile_name]
    results = []
    all_ok = True
    for name, fn in CHECKS:
        start = time.perf_counter()
        try:
            ok, detail = fn(profile)
        except Exception as exc:  # a crashed check is a failed check
            ok, detail = False, f"exception: {exc}"
        if corrupt == name:
            ok, detail = False, "corrupted by test hook"
        elapsed = time.perf_counter() - start
        results.append({"name": name, "ok": ok, "detail": detail, "seconds": round(elapsed, 3)})
        all_ok = all_ok and ok
    return {"profile": profile_name, "ok": all_ok, "checks": results}
