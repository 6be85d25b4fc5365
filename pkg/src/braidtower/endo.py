"""
Homomorphisms out of the affine-type group, given by generator images.

The generator-image data covers the finite automorphism family (rotation,
reflection, global inversion), the twisted non-injective families alpha_p
and beta_p landing in the finite parabolic, the constructible families into
the one-larger braid group, and classification certificates whose
correctness reduces to finitely many word-problem checks.
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Sequence

from . import coxeter, garside, words
from .coxeter import CoxeterGraph, Family
from .garside import BraidWord, concat, equals, invert, power
from .tower import (
    AffineElement,
    TWord,
    ambient_strands,
    delta_Y_t_word,
    distinguished,
    iota_affine,
    membership,
)


def _t_word_power(w: TWord, k: int) -> TWord:
    if k < 0:
        return _t_word_power(tuple((i, -e) for i, e in reversed(w)), -k)
    return w * k


def affine_relations(n: int) -> list[coxeter.Relation]:
    return coxeter.relations(CoxeterGraph(Family.AffineA, n))


@dataclasses.dataclass(frozen=True)
class AutStarElement:
    """
    Canonical form zeta^m eta^e mu^f of an element of the finite automorphism
    group: zeta rotates the graph, eta reflects it, mu inverts every generator.
    """

    n: int
    m: int
    e: int
    f: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("need n >= 2")
        object.__setattr__(self, "m", self.m % (self.n + 1))
        object.__setattr__(self, "e", self.e % 2)
        object.__setattr__(self, "f", self.f % 2)

    def image_index(self, i: int) -> int:
        j = (self.n - i) if self.e else i
        return (j + self.m) % (self.n + 1)

    @property
    def sign(self) -> int:
        return -1 if self.f else 1

    def compose(self, other: "AutStarElement") -> "AutStarElement":
        """self after other, using zeta^{n+1}=1, eta^2=1, eta zeta eta = zeta^-1, mu central."""
        if self.n != other.n:
            raise ValueError("rank mismatch")
        m = self.m + (-other.m if self.e else other.m)
        return AutStarElement(self.n, m, self.e + other.e, self.f + other.f)

    def to_json(self) -> dict:
        return {"zeta": self.m, "eta": self.e, "mu": self.f}


def autstar_compose(u: AutStarElement, v: AutStarElement) -> AutStarElement:
    return u.compose(v)


def all_autstar(n: int) -> list[AutStarElement]:
    """All 4(n+1) canonical forms."""
    return [
        AutStarElement(n, m, e, f)
        for m in range(n + 1)
        for e in (0, 1)
        for f in (0, 1)
    ]


@dataclasses.dataclass(eq=False)
class GenImageHom:
    """
    A homomorphism given by the images of t0..tn.  The codomain is either the
    affine floor itself ("affine", images are AffineElement) or the ambient
    braid group on n+2 strands ("ambient", images are plain words).
    """

    n: int
    images: tuple
    codomain: str = "affine"
    verified: bool = False
    # When built by conjugation, remember the base: relation checking then
    # reduces to the base hom, since conjugation reflects equality.
    base: "GenImageHom | None" = None

    def image_word(self, i: int) -> BraidWord:
        img = self.images[i]
        return img.ambient if isinstance(img, AffineElement) else img

    def image_t_word(self, i: int) -> TWord | None:
        img = self.images[i]
        return img.t_word if isinstance(img, AffineElement) else None

    def apply_t_word(self, w: Sequence[tuple[int, int]]):
        """Image of a word in t0..tn under substitution."""
        if self.codomain == "affine":
            result = AffineElement.identity(self.n)
            for index, exponent in w:
                img = self.images[index]
                piece = img if exponent > 0 else img.inv()
                for _ in range(abs(exponent)):
                    result = result * piece
            return result
        parts = [BraidWord.empty(ambient_strands(self.n))]
        for index, exponent in w:
            parts.append(power(self.images[index], exponent))
        return concat(*parts)

    def apply_t_word_ambient(self, w: Sequence[tuple[int, int]]) -> BraidWord:
        img = self.apply_t_word(w)
        return img.ambient if isinstance(img, AffineElement) else img


def make_hom(images: Sequence, n: int, codomain: str = "affine") -> GenImageHom:
    """Store generator images, unverified."""
    if codomain not in ("affine", "ambient"):
        raise ValueError(f"unknown codomain {codomain!r}")
    if len(images) != n + 1:
        raise ValueError(f"expected {n + 1} images, got {len(images)}")
    m = ambient_strands(n)
    for img in images:
        if codomain == "affine":
            if not isinstance(img, AffineElement) or img.n != n:
                raise ValueError("affine codomain needs AffineElement images of matching rank")
        else:
            if not isinstance(img, BraidWord) or img.strands != m:
                raise ValueError("ambient codomain needs words on n+2 strands")
    return GenImageHom(n, tuple(images), codomain)


def verify_hom(h: GenImageHom) -> bool:
    """Check every defining relation on the images; set the verified flag."""
    if h.base is not None:
        ok = h.base.verified or verify_hom(h.base)
    else:
        ok = True
        for rel in affine_relations(h.n):
            lhs = h.apply_t_word_ambient([(i, 1) for i in rel.lhs])
            rhs = h.apply_t_word_ambient([(i, 1) for i in rel.rhs])
            if not equals(lhs, rhs):
                ok = False
                break
    h.verified = ok
    return ok


def _require_verified(*homs: GenImageHom) -> None:
    for h in homs:
        if not h.verified:
            raise ValueError("operation requires verified homomorphisms")


def compose_hom(g: GenImageHom, h: GenImageHom) -> GenImageHom:
    """g after h, by substituting h's generator images (as t-words) into g."""
    _require_verified(g, h)
    if h.codomain != "affine":
        raise ValueError("the inner hom must land on the affine floor")
    images = []
    for i in range(h.n + 1):
        tw = h.image_t_word(i)
        if tw is None:
            raise ValueError("composition needs images with known t-words")
        images.append(g.apply_t_word(tw))
    out = GenImageHom(g.n, tuple(images), g.codomain)
    out.verified = True
    return out


def conjugate_hom(a, h: GenImageHom) -> GenImageHom:
    """conj_a after h; stays verified."""
    _require_verified(h)
    if h.codomain == "affine":
        if not isinstance(a, AffineElement):
            raise ValueError("conjugator must live in the codomain")
        images = tuple(a.conj(img) for img in h.images)
    else:
        if not isinstance(a, BraidWord):
            raise ValueError("conjugator must live in the codomain")
        images = tuple(garside.conjugate(a, img) for img in h.images)
    out = GenImageHom(h.n, images, h.codomain, base=h)
    out.verified = h.verified
    return out


def hom_equal(h1: GenImageHom, h2: GenImageHom) -> bool:
    """Equality as homomorphisms: agreement on every generator."""
    if h1.n != h2.n or h1.codomain != h2.codomain:
        return False
    return all(equals(h1.image_word(i), h2.image_word(i)) for i in range(h1.n + 1))


def identity_hom(n: int) -> GenImageHom:
    h = make_hom([iota_affine([(i, 1)], n) for i in range(n + 1)], n)
    h.verified = True
    return h


def cyclic_hom(target: AffineElement) -> GenImageHom:
    """All generators to one element; relations hold automatically."""
    h = make_hom([target] * (target.n + 1), target.n)
    h.verified = True
    return h


@functools.lru_cache(maxsize=None)
def autstar_hom(n: int, m: int, e: int, f: int) -> GenImageHom:
    psi = AutStarElement(n, m, e, f)
    images = [
        iota_affine([(psi.image_index(i), psi.sign)], n) for i in range(n + 1)
    ]
    h = make_hom(images, n)
    if not verify_hom(h):
        raise RuntimeError("graph automorphism images failed relation check")
    return h


def autstar(m: int, e: int, f: int, n: int) -> GenImageHom:
    return autstar_hom(n, m, e, f)


def _twisted_family(n: int, v_name: str, p: int) -> GenImageHom:
    dy2p = _t_word_power(delta_Y_t_word(n), 2 * p)
    v: AffineElement = distinguished(v_name, n)
    images = [iota_affine(v.t_word + dy2p, n)]
    images += [iota_affine(((i, 1),) + dy2p, n) for i in range(1, n + 1)]
    h = make_hom(images, n)
    if not verify_hom(h):
        raise RuntimeError(f"{v_name} family images failed relation check")
    return h


@functools.lru_cache(maxsize=None)
def alpha(p: int, n: int) -> GenImageHom:
    """t_i -> t_i D_Y^{2p}, t_0 -> v_0 D_Y^{2p}."""
    return _twisted_family(n, "v0", p)


@functools.lru_cache(maxsize=None)
def beta(p: int, n: int) -> GenImageHom:
    """t_i -> t_i D_Y^{2p}, t_0 -> v_1 D_Y^{2p}."""
    return _twisted_family(n, "v1", p)


@functools.lru_cache(maxsize=None)
def _prop41_base(n: int, k: int, family: str, eps: int, p: int, q: int) -> GenImageHom:
    m = ambient_strands(n)
    central = concat(
        power(iota_affine(delta_Y_t_word(n), n).ambient, 2 * p),
        power(garside.delta_word(m), 2 * q),
    )
    w_name = {"u": ("u0", "u1"), "v": ("v0", "v1")}[family][k]
    w: AffineElement = distinguished(w_name, n)
    images = [concat(power(w.ambient, eps), central)]
    images += [
        concat(BraidWord(m, ((i, eps),)), central) for i in range(1, n + 1)
    ]
    h = make_hom(images, n, codomain="ambient")
    if not verify_hom(h):
        raise RuntimeError("constructed family failed relation check")
    return h


def prop41_hom(
    k: int,
    family: str,
    eps: int,
    p: int,
    q: int,
    g: BraidWord | None,
    n: int,
) -> GenImageHom:
    """
    The classified families into the one-larger braid group:
    t_i -> g w_i^eps D_Y^{2p} D^{2q} g^-1 with w_0 in {u_k, v_k}, w_i = sigma_i.
    The u-family carries no parabolic twist, so it forces p = 0.
    """
    if family not in ("u", "v"):
        raise ValueError("family must be 'u' or 'v'")
    if k not in (0, 1) or eps not in (1, -1):
        raise ValueError("k must be 0/1 and eps +-1")
    if family == "u" and p != 0:
        raise ValueError("the u-family admits no parabolic twist (p must be 0)")
    h = _prop41_base(n, k, family, eps, p, q)
    if g is not None and not g.is_empty():
        h = conjugate_hom(g, h)
    return h


@dataclasses.dataclass(frozen=True)
class Certificate:
    """
    Classification data: the case label plus the data needed to rebuild the
    hom (conjugator, finite automorphism part, twist exponent, cyclic target).
    """

    case: str  # cyclic | autstar | alpha | beta
    conjugator: AffineElement | None = None
    psi: AutStarElement | None = None
    p: int | None = None
    target: AffineElement | None = None

    def __post_init__(self):
        if self.case == "cyclic":
            if self.target is None:
                raise ValueError("cyclic certificate needs a target")
        elif self.case == "autstar":
            if self.psi is None:
                raise ValueError("autstar certificate needs psi")
        elif self.case in ("alpha", "beta"):
            if self.psi is None or self.p is None:
                raise ValueError(f"{self.case} certificate needs psi and p")
        else:
            raise ValueError(f"unknown certificate case {self.case!r}")

    def to_json(self) -> dict:
        data: dict = {"case": self.case}
        if self.conjugator is not None and self.conjugator.t_word is not None:
            data["conjugator"] = words.format_word("t", self.conjugator.t_word)
        if self.psi is not None:
            data["psi"] = self.psi.to_json()
        if self.p is not None:
            data["p"] = self.p
        if self.target is not None and self.target.t_word is not None:
            data["target"] = words.format_word("t", self.target.t_word)
        return data

    @classmethod
    def from_json(cls, data: dict, n: int) -> "Certificate":
        def parse_element(text: str) -> AffineElement:
            letter, letters = words.parse_word(text)
            if letter not in (None, "t"):
                raise ValueError("certificate elements must be words in t-letters")
            return iota_affine(letters, n)

        psi = None
        if "psi" in data:
            d = data["psi"]
            psi = AutStarElement(n, d.get("zeta", 0), d.get("eta", 0), d.get("mu", 0))
        conjugator = parse_element(data["conjugator"]) if "conjugator" in data else None
        target = parse_element(data["target"]) if "target" in data else None
        return cls(data["case"], conjugator, psi, data.get("p"), target)


def certified_hom(c: Certificate, n: int) -> GenImageHom:
    """Rebuild the hom a certificate describes."""
    if c.case == "cyclic":
        h = cyclic_hom(c.target)
    else:
        psi = autstar_hom(n, c.psi.m, c.psi.e, c.psi.f)
        if c.case == "autstar":
            h = psi
        elif c.case == "alpha":
            h = compose_hom(psi, alpha(c.p, n))
        else:
            h = compose_hom(psi, beta(c.p, n))
    if c.conjugator is not None:
        h = conjugate_hom(c.conjugator, h)
    return h


def certificate_check(h: GenImageHom, c: Certificate) -> bool:
    """Whether the certificate's data rebuilds exactly the given hom."""
    _require_verified(h)
    if h.codomain != "affine":
        raise ValueError("certificates classify endomorphisms of the affine floor")
    return hom_equal(h, certified_hom(c, h.n))


def conjugator_search(
    h: GenImageHom,
    base: GenImageHom,
    max_len: int = 8,
    max_states: int = 20000,
) -> AffineElement | None:
    """
    Bounded breadth-first search for g with conj_g(base) = h, over conjugators
    of t-letter length up to max_len.  Explicitly incomplete: None means no
    conjugator was found within the budget, not that none exists.
    """
    _require_verified(h, base)
    if h.n != base.n or h.codomain != "affine" or base.codomain != "affine":
        raise ValueError("search needs two verified homs on the affine floor")
    n = h.n

    def key(images) -> tuple:
        return tuple(garside.normal_form(img.ambient) for img in images)

    target = key(h.images)
    start = AffineElement.identity(n)
    frontier = [(start, base.images)]
    seen = {key(base.images)}
    if key(base.images) == target:
        return start
    letters = [
        iota_affine(((i, s),), n) for i in range(n + 1) for s in (1, -1)
    ]
    for _ in range(max_len):
        next_frontier = []
        for g, images in frontier:
            for x in letters:
                new_images = tuple(x.conj(img) for img in images)
                k = key(new_images)
                if k in seen:
                    continue
                seen.add(k)
                new_g = x * g
                if k == target:
                    return new_g
                next_frontier.append((new_g, new_images))
                if len(seen) > max_states:
                    return None
        frontier = next_frontier
    return None


@dataclasses.dataclass(frozen=True)
class InvariantReport:
    """Cheap conjugation-invariant data screened off a verified hom."""

    n: int
    x_values: tuple[int, ...]
    is_cyclic: bool
    z_values: tuple[int, ...] | None
    permutations: tuple[str, ...]
    candidate_p: int | None
    in_parabolic: tuple[bool, ...]
    small_rank_warning: bool

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "x_values": list(self.x_values),
            "is_cyclic": self.is_cyclic,
            "z_values": list(self.z_values) if self.z_values is not None else None,
            "permutations": list(self.permutations),
            "candidate_p": self.candidate_p,
            "in_parabolic": list(self.in_parabolic),
            "small_rank_warning": self.small_rank_warning,
        }


def invariant_screen(h: GenImageHom) -> InvariantReport:
    _require_verified(h)
    n = h.n
    x_values = tuple(garside.exponent_sum(h.image_word(i)) for i in range(n + 1))
    first = h.image_word(0)
    is_cyclic = all(equals(first, h.image_word(i)) for i in range(1, n + 1))
    z_values = None
    if h.codomain == "affine":
        z_values = tuple(0 for _ in range(n + 1))  # forced by the affine invariant
    permutations = tuple(
        garside.underlying_permutation(h.image_word(i)).one_line() for i in range(n + 1)
    )
    in_parabolic = tuple(
        membership(h.image_word(i), "ay", n) for i in range(n + 1)
    )
    x1 = x_values[1] if n >= 1 else x_values[0]
    big_n = n * (n + 1)
    candidate_p = None
    for target in (x1, -x1):
        if (target - 1) % big_n == 0:
            candidate_p = (target - 1) // big_n
            break
    return InvariantReport(
        n,
        x_values,
        is_cyclic,
        z_values,
        permutations,
        candidate_p,
        in_parabolic,
        small_rank_warning=n < 4,
    )


def noninjectivity_witness(family: str, p: int, n: int) -> tuple[AffineElement, AffineElement]:
    """
    Two distinct elements with equal images under the family hom: t_0 and the
    conjugate of t_n it collapses onto.
    """
    if family == "alpha":
        h, v_name = alpha(p, n), "v0"
    elif family == "beta":
        h, v_name = beta(p, n), "v1"
    else:
        raise ValueError("family must be 'alpha' or 'beta'")
    w1 = iota_affine(((0, 1),), n)
    w2: AffineElement = distinguished(v_name, n)
    img1 = h.apply_t_word_ambient(w1.t_word)
    img2 = h.apply_t_word_ambient(w2.t_word)
    if not equals(img1, img2):
        raise RuntimeError("witness images disagree: family construction broken")
    graph = CoxeterGraph(Family.AffineA, n)
    screen1 = coxeter.affine_in_finite_parabolic(coxeter.coxeter_project(w1.t_word, graph))
    screen2 = coxeter.affine_in_finite_parabolic(coxeter.coxeter_project(w2.t_word, graph))
    if screen1 or not screen2:
        raise RuntimeError("witnesses are not separated by the Coxeter screen")
    return w1, w2


def prop22_distinguishers(p: int, q: int, n: int) -> dict:
    """
    The abelianized-exponent arithmetic separating the twisted families, plus
    the direct inequality of the two t_0 images at equal twist.
    """
    big_n = n * (n + 1)
    x_alpha_p = garside.exponent_sum(alpha(p, n).image_word(1))
    x_alpha_q = garside.exponent_sum(alpha(q, n).image_word(1))
    formula_ok = x_alpha_p == 1 + p * big_n and x_alpha_q == 1 + q * big_n
    sign_match = x_alpha_p in (x_alpha_q, -x_alpha_q)
    arithmetic_ok = sign_match == (p == q) if n >= 4 else None
    alpha_beta_differ = not equals(alpha(p, n).image_word(0), beta(p, n).image_word(0))
    return {
        "n": n,
        "p": p,
        "q": q,
        "x_values": [x_alpha_p, x_alpha_q],
        "formula_ok": formula_ok,
        "distinguishable_by_x": not sign_match,
        "arithmetic_ok": arithmetic_ok,
        "alpha_beta_differ": alpha_beta_differ,
        "small_rank_warning": n < 4,
    }
