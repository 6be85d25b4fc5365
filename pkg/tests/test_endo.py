from __future__ import annotations

import json

import pytest

from braidtower import endo
from braidtower.coxeter import CoxeterGraph, Family, affine_in_finite_parabolic, coxeter_project
from braidtower.garside import concat, equals, exponent_sum, invert
from braidtower.tower import distinguished, iota_affine


def test_autstar_element_normalization():
    psi = endo.AutStarElement(4, 7, 3, 2)
    assert (psi.m, psi.e, psi.f) == (2, 1, 0)


def test_autstar_group_laws_elementwise():
    n = 4
    zeta = endo.AutStarElement(n, 1, 0, 0)
    eta = endo.AutStarElement(n, 0, 1, 0)
    ident = endo.AutStarElement(n, 0, 0, 0)
    acc = ident
    for _ in range(n + 1):
        acc = zeta.compose(acc)
    assert acc == ident
    assert eta.compose(eta) == ident
    assert eta.compose(zeta).compose(eta) == endo.AutStarElement(n, -1, 0, 0)
    assert len(set(endo.all_autstar(n))) == 4 * (n + 1)


def test_zeta_rotates_eta_reflects_mu_inverts():
    n = 3
    zeta = endo.autstar(1, 0, 0, n)
    assert equals(zeta.image_word(0), iota_affine([(1, 1)], n).ambient)
    assert equals(zeta.image_word(n), iota_affine([(0, 1)], n).ambient)
    eta = endo.autstar(0, 1, 0, n)
    assert equals(eta.image_word(1), iota_affine([(n - 1, 1)], n).ambient)
    mu = endo.autstar(0, 0, 1, n)
    assert equals(mu.image_word(2), iota_affine([(2, -1)], n).ambient)


def test_alpha_beta_definitions():
    n = 3
    assert equals(endo.alpha(0, n).image_word(0), distinguished("v0", n).ambient)
    assert equals(endo.beta(0, n).image_word(0), distinguished("v1", n).ambient)
    dy = distinguished("delta_Y", n).ambient
    expected = concat(iota_affine([(2, 1)], n).ambient, dy, dy)
    assert equals(endo.alpha(1, n).image_word(2), expected)


def test_exponent_sum_formula():
    for n in (2, 4):
        for p in (-2, 0, 3):
            assert exponent_sum(endo.alpha(p, n).image_word(1)) == 1 + p * n * (n + 1)


def test_mu_sends_v0_to_v1_inverse():
    n = 3
    mu = endo.autstar(0, 0, 1, n)
    v0 = distinguished("v0", n)
    image = mu.apply_t_word_ambient(v0.t_word)
    assert equals(image, invert(distinguished("v1", n).ambient))


def test_prop41_recovers_alpha_and_inclusion():
    n = 2
    for p in (0, 1, -1):
        h = endo.prop41_hom(0, "v", 1, p, 0, None, n)
        target = endo.alpha(p, n)
        for i in range(n + 1):
            assert equals(h.image_word(i), target.image_word(i))
    h = endo.prop41_hom(0, "u", 1, 0, 0, None, n)
    for i in range(n + 1):
        assert equals(h.image_word(i), iota_affine([(i, 1)], n).ambient)


def test_u_family_rejects_parabolic_twist():
    with pytest.raises(ValueError):
        endo.prop41_hom(0, "u", 1, 1, 0, None, 2)


def test_compose_and_conjugate():
    n = 2
    zeta = endo.autstar(1, 0, 0, n)
    comp = endo.compose_hom(zeta, endo.alpha(1, n))
    assert comp.verified
    g = iota_affine([(0, 1), (1, -1)], n)
    conj = endo.conjugate_hom(g, comp)
    assert endo.verify_hom(conj)
    expected = g.conj(comp.images[0])
    assert equals(conj.image_word(0), expected.ambient)


def test_unverified_hom_rejected():
    n = 2
    h = endo.make_hom([iota_affine([(i, 1)], n) for i in range(n + 1)], n)
    with pytest.raises(ValueError):
        endo.compose_hom(h, h)


def test_fix_y_certificate():
    # h = alpha_p is certified by (alpha, Delta_Y, psi=zeta eta, p)
    n = 4
    for p in (-1, 1):
        cert = endo.Certificate(
            "alpha",
            conjugator=distinguished("delta_Y", n),
            psi=endo.AutStarElement(n, 1, 1, 0),
            p=p,
        )
        assert endo.certificate_check(endo.alpha(p, n), cert)


def test_beta_certificate_never_matches_alpha():
    n = 4
    for psi in (endo.AutStarElement(n, 0, 0, 0), endo.AutStarElement(n, 2, 1, 0)):
        cert = endo.Certificate("beta", psi=psi, p=1)
        assert not endo.certificate_check(endo.alpha(1, n), cert)


def test_certificate_functoriality():
    # checking against conj_g h with conjugator g*g' agrees with checking h against g'
    n = 2
    g = iota_affine([(2, 1), (0, -1)], n)
    g_prime = iota_affine([(1, 1)], n)
    psi = endo.AutStarElement(n, 1, 0, 1)
    h = endo.conjugate_hom(g_prime, endo.autstar(psi.m, psi.e, psi.f, n))
    cert_inner = endo.Certificate("autstar", conjugator=g_prime, psi=psi)
    cert_outer = endo.Certificate("autstar", conjugator=g * g_prime, psi=psi)
    assert endo.certificate_check(h, cert_inner)
    assert endo.certificate_check(endo.conjugate_hom(g, h), cert_outer)


def test_certificate_json_round_trip():
    n = 4
    cert = endo.Certificate(
        "alpha",
        conjugator=iota_affine([(0, 1), (1, -1)], n),
        psi=endo.AutStarElement(n, 2, 0, 1),
        p=1,
    )
    data = json.loads(json.dumps(cert.to_json()))
    back = endo.Certificate.from_json(data, n)
    assert back.case == "alpha" and back.p == 1
    assert back.psi == cert.psi
    assert equals(back.conjugator.ambient, cert.conjugator.ambient)


def test_certificate_validation():
    with pytest.raises(ValueError):
        endo.Certificate("cyclic")
    with pytest.raises(ValueError):
        endo.Certificate("alpha", psi=endo.AutStarElement(4, 0, 0, 0))
    with pytest.raises(ValueError):
        endo.Certificate("unknown")


def test_invariant_screen_identity():
    n = 4
    report = endo.invariant_screen(endo.identity_hom(n))
    assert report.x_values == tuple([1] * (n + 1))
    assert report.candidate_p == 0
    assert not report.is_cyclic
    assert not report.small_rank_warning


def test_invariant_screen_alpha_and_cyclic():
    n = 4
    for p in (-2, 0, 2):
        report = endo.invariant_screen(endo.alpha(p, n))
        assert report.candidate_p == p
        assert not report.is_cyclic
        assert all(report.in_parabolic)
    cyclic = endo.cyclic_hom(iota_affine([(1, 1)], n))
    assert endo.invariant_screen(cyclic).is_cyclic


def test_small_rank_warning():
    assert endo.invariant_screen(endo.identity_hom(2)).small_rank_warning


def test_noninjectivity_witness():
    n = 4
    w1, w2 = endo.noninjectivity_witness("alpha", 0, n)
    assert w1.t_word == ((0, 1),)
    graph = CoxeterGraph(Family.AffineA, n)
    assert not affine_in_finite_parabolic(coxeter_project(w1.t_word, graph))
    assert affine_in_finite_parabolic(coxeter_project(w2.t_word, graph))
    with pytest.raises(ValueError):
        endo.noninjectivity_witness("gamma", 0, n)


def test_prop22_distinguishers():
    r = endo.prop22_distinguishers(1, 1, 4)
    assert r["x_values"] == [21, 21]
    assert r["formula_ok"] and r["arithmetic_ok"] and r["alpha_beta_differ"]
    r = endo.prop22_distinguishers(1, -1, 4)
    assert r["x_values"] == [21, -19]
    assert r["distinguishable_by_x"] and r["arithmetic_ok"]
    assert endo.prop22_distinguishers(0, 0, 2)["small_rank_warning"]


def test_conjugator_search():
    n = 2
    base = endo.autstar(1, 1, 0, n)
    g = iota_affine([(0, 1), (2, -1)], n)
    h = endo.conjugate_hom(g, base)
    found = endo.conjugator_search(h, base, max_len=3)
    assert found is not None
    assert endo.hom_equal(endo.conjugate_hom(found, base), h)
    # incompleteness is explicit: too small a budget just returns None
    assert endo.conjugator_search(h, base, max_len=0) is None
