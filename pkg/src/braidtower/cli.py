"""
Command-line front end.  One binary with verb-style subcommands; group
parameters are always explicit (--n has no default).

Exit codes: 0 success or verified-true, 1 verified-false, 2 usage or parse
error, 3 free-word budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import endo, garside, selftest, tower, words
from .freeaction import BudgetExceededError, artin_action
from .garside import BraidWord
from .tower import AffineElement
from .words import WordParseError

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class UsageError(ValueError):
    pass


def parse_element(text: str, n: int) -> BraidWord:
    """Parse a word in any alphabet and embed it into the ambient group."""
    letter, letters = words.parse_word(text)
    if letter is None:
        return BraidWord.empty(tower.ambient_strands(n))
    if letter == "t":
        return tower.iota_affine(letters, n).ambient
    if letter == "s":
        return tower.iota_Y(letters, n).ambient
    if letter == "r":
        return tower.iota_B(letters, n).ambient
    return BraidWord(tower.ambient_strands(n), tuple(letters))


def parse_affine(text: str, n: int) -> AffineElement:
    letter, letters = words.parse_word(text)
    if letter not in (None, "t"):
        raise UsageError(f"expected a word in t-letters, got alphabet {letter!r}")
    return tower.iota_affine(letters, n)


def parse_hom(spec: str, n: int) -> endo.GenImageHom:
    """
    Hom specs: id | zeta | eta | mu | autstar:m,e,f | alpha:p | beta:p |
    cyclic:<t-word> | prop41:family,k,eps,p,q
    """
    name, _, arg = spec.partition(":")
    try:
        if name == "id":
            return endo.identity_hom(n)
        if name == "zeta":
            return endo.autstar(1, 0, 0, n)
        if name == "eta":
            return endo.autstar(0, 1, 0, n)
        if name == "mu":
            return endo.autstar(0, 0, 1, n)
        if name == "autstar":
            m, e, f = (int(x) for x in arg.split(","))
            return endo.autstar(m, e, f, n)
        if name == "alpha":
            return endo.alpha(int(arg), n)
        if name == "beta":
            return endo.beta(int(arg), n)
        if name == "cyclic":
            return endo.cyclic_hom(parse_affine(arg, n))
        if name == "prop41":
            family, k, eps, p, q = arg.split(",")
            return endo.prop41_hom(int(k), family, int(eps), int(p), int(q), None, n)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, UsageError):
            raise
        raise UsageError(f"bad hom spec {spec!r}: {exc}") from exc
    raise UsageError(f"unknown hom spec {spec!r}")


def format_ambient(w: BraidWord) -> str:
    return words.format_word("a", w.letters)


def hom_images_json(h: endo.GenImageHom) -> dict:
    out = {}
    for i in range(h.n + 1):
        tw = h.image_t_word(i)
        if tw is not None:
            out[f"t{i}"] = words.format_word("t", tw)
        else:
            out[f"t{i}"] = format_ambient(h.image_word(i))
    return out


def emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


# Verb implementations; each returns an exit code.


def cmd_nf(args) -> int:
    w = parse_element(args.word, args.n)
    nf = garside.normal_form(w)
    payload = {
        "inf": nf.inf,
        "canonical_length": nf.canonical_length,
        "factors": [f.permutation.one_line() for f in nf.factors],
        "word": format_ambient(nf.to_word()),
    }
    emit(args, payload, nf.serialize())
    return EXIT_OK


def cmd_eq(args) -> int:
    same = garside.equals(parse_element(args.word1, args.n), parse_element(args.word2, args.n))
    emit(args, {"equal": same}, "true" if same else "false")
    return EXIT_OK if same else EXIT_FALSE


def cmd_inv(args) -> int:
    h = parse_hom(args.hom, args.n)
    report = endo.invariant_screen(h)
    emit(args, report.to_json(), json.dumps(report.to_json(), indent=2))
    return EXIT_OK


def cmd_member(args) -> int:
    w = parse_element(args.word, args.n)
    ok = tower.membership(w, args.floor, args.n)
    reason = ""
    if not ok:
        if args.floor == "ay":
            m = w.strands
            if artin_action(w).image_of(m) != ((m, 1),):
                reason = f"moves x{m}"
        elif args.floor == "b":
            reason = "does not fix the last point"
        elif args.floor == "affine":
            reason = "nonzero winding or moves the last point"
    payload = {"floor": args.floor, "member": ok, "reason": reason or None}
    emit(args, payload, "true" if ok else f"false ({reason})" if reason else "false")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_gen(args) -> int:
    elt = tower.distinguished(args.name, args.n)
    if isinstance(elt, AffineElement):
        ambient = elt.ambient
        t_word = elt.t_word
    elif isinstance(elt, BraidWord):
        ambient, t_word = elt, None
    else:
        ambient, t_word = elt.ambient, None
    payload = {"name": args.name, "ambient": format_ambient(ambient)}
    if t_word is not None:
        payload["t_word"] = words.format_word("t", t_word)
    emit(args, payload, payload.get("t_word", payload["ambient"]))
    return EXIT_OK


def cmd_hom_verify(args) -> int:
    h = parse_hom(args.hom, args.n)
    ok = endo.verify_hom(h)
    emit(args, {"verified": ok, "images": hom_images_json(h)}, "true" if ok else "false")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_hom_compose(args) -> int:
    outer = parse_hom(args.hom, args.n)
    inner = parse_hom(args.inner, args.n)
    endo.verify_hom(outer)
    endo.verify_hom(inner)
    h = endo.compose_hom(outer, inner)
    payload = {"images": hom_images_json(h)}
    emit(args, payload, "\n".join(f"t{i} -> {v}" for i, v in enumerate(payload["images"].values())))
    return EXIT_OK


def cmd_hom_conj(args) -> int:
    h = parse_hom(args.hom, args.n)
    endo.verify_hom(h)
    if h.codomain == "affine":
        conjugator = parse_affine(args.by, args.n)
    else:
        conjugator = parse_element(args.by, args.n)
    out = endo.conjugate_hom(conjugator, h)
    payload = {"images": hom_images_json(out)}
    emit(args, payload, "\n".join(f"t{i} -> {v}" for i, v in enumerate(payload["images"].values())))
    return EXIT_OK


def cmd_cert_check(args) -> int:
    h = parse_hom(args.hom, args.n)
    endo.verify_hom(h)
    try:
        cert = endo.Certificate.from_json(json.loads(args.cert), args.n)
    except (json.JSONDecodeError, ValueError, KeyError, TypeError) as exc:
        raise UsageError(f"bad certificate: {exc}") from exc
    ok = endo.certificate_check(h, cert)
    emit(args, {"certified": ok}, "true" if ok else "false")
    return EXIT_OK if ok else EXIT_FALSE


def cmd_witness(args) -> int:
    w1, w2 = endo.noninjectivity_witness(args.family, args.p, args.n)
    payload = {
        "family": args.family,
        "p": args.p,
        "witness1": words.format_word("t", w1.t_word),
        "witness2": words.format_word("t", w2.t_word),
    }
    emit(
        args,
        payload,
        f"{payload['witness1']!r} and {payload['witness2']!r} have equal images",
    )
    return EXIT_OK


def cmd_selftest(args) -> int:
    report = selftest.run_selftest(args.profile, corrupt=args.corrupt)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for check in report["checks"]:
            status = "PASS" if check["ok"] else "FAIL"
            print(f"{status}  {check['name']:34s} {check['seconds']:8.3f}s  {check['detail']}")
        print("all checks passed" if report["ok"] else "FAILURES present")
    return EXIT_OK if report["ok"] else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="braidtower")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, *, needs_n=True):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        if needs_n:
            p.add_argument("--n", type=int, required=True, help="affine rank (no default)")
        p.add_argument("--json", action="store_true")
        return p

    p = add("nf", cmd_nf)
    p.add_argument("word")
    p = add("eq", cmd_eq)
    p.add_argument("word1")
    p.add_argument("word2")
    p = add("inv", cmd_inv)
    p.add_argument("--hom", required=True)
    p = add("member", cmd_member)
    p.add_argument("--floor", choices=tower.FLOORS, required=True)
    p.add_argument("word")
    p = add("gen", cmd_gen)
    p.add_argument("name", choices=tower.DISTINGUISHED_NAMES)
    p = add("hom-verify", cmd_hom_verify)
    p.add_argument("--hom", required=True)
    p = add("hom-compose", cmd_hom_compose)
    p.add_argument("--hom", required=True, help="outer hom spec")
    p.add_argument("--inner", required=True, help="inner hom spec")
    p = add("hom-conj", cmd_hom_conj)
    p.add_argument("--hom", required=True)
    p.add_argument("--by", required=True, help="conjugating element")
    p = add("cert-check", cmd_cert_check)
    p.add_argument("--hom", required=True)
    p.add_argument("--cert", required=True, help="certificate JSON")
    p = add("witness", cmd_witness)
    p.add_argument("--family", choices=("alpha", "beta"), required=True)
    p.add_argument("--p", type=int, required=True)
    p = add("selftest", cmd_selftest, needs_n=False)
    p.add_argument("--profile", choices=("quick", "full"), default="quick")
    p.add_argument("--corrupt", default=None, help="force the named check to fail")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (WordParseError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
