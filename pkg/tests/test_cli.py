from __future__ import annotations

import json
from importlib import resources

import jsonschema
import pytest

from braidtower import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def load_schema(name: str) -> dict:
    text = resources.files("braidtower.schemas").joinpath(name).read_text()
    return json.loads(text)


def test_eq_braid_relation(capsys):
    code, out, _ = run(capsys, "eq", "--n", "4", "t0 t1 t0", "t1 t0 t1")
    assert code == 0 and out.strip() == "true"


def test_eq_false_exit_one(capsys):
    code, out, _ = run(capsys, "eq", "--n", "4", "t0", "t1")
    assert code == 1 and out.strip() == "false"


def test_eq_cross_alphabet_embedding(capsys):
    # r3 embeds as a3^2 for n=2
    code, _, _ = run(capsys, "eq", "--n", "2", "r3", "a3^2")
    assert code == 0


def test_nf_round_trip(capsys):
    code, out, _ = run(capsys, "nf", "--n", "2", "--json", "a1^-1 a2 a1")
    assert code == 0
    payload = json.loads(out)
    code2, _, _ = run(capsys, "eq", "--n", "2", payload["word"], "a1^-1 a2 a1")
    assert code2 == 0


def test_member_reason(capsys):
    code, out, _ = run(capsys, "member", "--n", "4", "--floor", "ay", "t0")
    assert code == 1
    assert "moves x6" in out
    code, out, _ = run(capsys, "member", "--n", "4", "--floor", "affine", "t0")
    assert code == 0


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "--n", "3", "--json", "v0")
    assert code == 0
    payload = json.loads(out)
    assert payload["t_word"] == "t1 t2 t3 t2^-1 t1^-1"


def test_hom_verify(capsys):
    code, _, _ = run(capsys, "hom-verify", "--n", "2", "--hom", "alpha:1")
    assert code == 0
    code, _, _ = run(capsys, "hom-verify", "--n", "2", "--hom", "prop41:v,0,1,1,0")
    assert code == 0


def test_hom_compose_and_conj(capsys):
    code, out, _ = run(
        capsys, "hom-compose", "--n", "2", "--json", "--hom", "zeta", "--inner", "zeta"
    )
    assert code == 0
    images = json.loads(out)["images"]
    assert images["t0"] == "t2"
    code, out, _ = run(
        capsys, "hom-conj", "--n", "2", "--json", "--hom", "eta", "--by", "t0 t1"
    )
    assert code == 0


def test_cert_check(capsys):
    cert = json.dumps({"case": "alpha", "p": 1, "psi": {"zeta": 1, "eta": 1},
                       "conjugator": "t1 t2 t1"})
    # conj_{Delta_Y} zeta eta alpha_1 = alpha_1 for n=2 (Delta_Y = t1 t2 t1)
    code, out, _ = run(capsys, "cert-check", "--n", "2", "--hom", "alpha:1", "--cert", cert)
    assert code == 0 and out.strip() == "true"
    wrong = json.dumps({"case": "beta", "p": 1, "psi": {}})
    code, out, _ = run(capsys, "cert-check", "--n", "2", "--hom", "alpha:1", "--cert", wrong)
    assert code == 1 and out.strip() == "false"


def test_cert_schema_validates_examples():
    schema = load_schema("certificate.schema.json")
    jsonschema.validate(
        {"case": "alpha", "p": 1, "psi": {"zeta": 2, "eta": 0, "mu": 1},
         "conjugator": "t0 t1^-1"},
        schema,
    )
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"case": "alpha"}, schema)


def test_inv_json_matches_schema(capsys):
    code, out, _ = run(capsys, "inv", "--n", "4", "--json", "--hom", "alpha:2")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("invariant_report.schema.json"))
    assert payload["candidate_p"] == 2


def test_witness(capsys):
    code, out, _ = run(capsys, "witness", "--n", "4", "--json", "--family", "alpha", "--p", "0")
    assert code == 0
    payload = json.loads(out)
    assert payload["witness1"] == "t0"


def test_parse_error_exit_two(capsys):
    code, _, err = run(capsys, "eq", "--n", "4", "t0 q1", "t0")
    assert code == 2
    assert "q1" in err and "offset" in err


def test_bad_hom_spec_exit_two(capsys):
    code, _, err = run(capsys, "hom-verify", "--n", "4", "--hom", "gamma:1")
    assert code == 2


def test_budget_exit_three(capsys, monkeypatch):
    monkeypatch.setenv("GT_BUDGET", "3")
    code, _, err = run(capsys, "member", "--n", "4", "--floor", "ay", "t0 t1 t2")
    assert code == 3
    assert "budget" in err


def test_selftest_json_schema_and_corrupt_hook(capsys):
    code, out, _ = run(
        capsys, "selftest", "--profile", "quick", "--json", "--corrupt",
        "half-twist-square-identity",
    )
    assert code == 1
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("selftest_report.schema.json"))
    failed = [c for c in payload["checks"] if not c["ok"]]
    assert [c["name"] for c in failed] == ["half-twist-square-identity"]
