"""
The acceptance suite: each criterion runs the corresponding full-profile
self-test check, asserts it passed, enforces its time budget, and prints a
single pass/fail line.
"""

from __future__ import annotations

import time

import pytest

from braidtower.selftest import CHECKS, PROFILES

CHECK_FNS = dict(CHECKS)

CRITERIA = [
    # (number, check name, seconds budget)
    (1, "embeddings-preserve-relations", 5),
    (2, "garside-free-action-agreement", 60),
    (3, "half-twist-square-identity", 5),
    (4, "splitting-conjugation-data", 5),
    (5, "families-verify", 120),
    (6, "autstar-structure", 10),
    (7, "parabolic-fixing-identity", 10),
    (8, "injectivity-witnesses", 10),
    (9, "exponent-sum-separation", 30),
    (10, "certificate-soundness", 120),
    (11, "normal-form-canonicality", 30),
]


@pytest.mark.parametrize("number,name,budget", CRITERIA, ids=[c[1] for c in CRITERIA])
def test_acceptance(number, name, budget, capsys):
    start = time.perf_counter()
    ok, detail = CHECK_FNS[name](PROFILES["full"])
    elapsed = time.perf_counter() - start
    status = "PASS" if ok and elapsed < budget else "FAIL"
    with capsys.disabled():
        print(f"\nACCEPTANCE {number:2d} {name}: {status} ({elapsed:.2f}s) {detail}")
    assert ok, f"criterion {number} ({name}) failed: {detail}"
    assert elapsed < budget, f"criterion {number} ({name}) exceeded {budget}s: {elapsed:.2f}s"
