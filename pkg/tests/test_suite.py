"""The verification-suite plumbing: report contract, determinism, dispatch."""

import json
from fractions import Fraction

import pytest

from normord.suite import (
    SUITE_IDS,
    IdentityReport,
    conjecture_probe,
    reports_to_json,
    run_identity,
    run_suite,
    suite_passed,
    verify_commutator,
    verify_exp_on_kummer,
    verify_exp_on_monomial,
)


def test_full_suite_green():
    reports = run_suite()
    assert reports
    assert suite_passed(reports)
    bad = [r for r in reports if r.status == "fail"]
    assert bad == []


def test_suite_deterministic_and_sorted():
    a = run_suite()
    b = run_suite()

    def strip(rep):
        d = rep.to_json_dict()
        d.pop("elapsed")
        return d

    assert [strip(r) for r in a] == [strip(r) for r in b]
    keys = [(r.identity, json.dumps(r.parameters, sort_keys=True, default=str))
            for r in a]
    assert keys == sorted(keys)


def test_exact_mode_never_carries_tolerance():
    for rep in run_suite(include_probes=False):
        if rep.mode == "exact":
            assert rep.precision is None
            assert rep.tolerance is None
        elif rep.mode == "numeric":
            assert rep.precision is not None
            assert rep.tolerance is not None


def test_report_contract_enforced():
    with pytest.raises(ValueError):
        IdentityReport("x", {}, "numeric", "pass", {}, 0.0)
    with pytest.raises(ValueError):
        IdentityReport("x", {}, "exact", "maybe", {}, 0.0)
    with pytest.raises(ValueError):
        IdentityReport("x", {}, "quantum", "pass", {}, 0.0)
    rep = IdentityReport("x", {"r": 1}, "exact", "pass", {}, 0.0)
    assert rep.ok
    assert rep.to_json_dict()["identity"] == "x"


def test_suite_passed_logic():
    ok = IdentityReport("x", {}, "exact", "pass", {}, 0.0)
    info = IdentityReport("y", {}, "informational", "informational", {}, 0.0)
    bad = IdentityReport("z", {}, "exact", "fail", {}, 0.0)
    assert suite_passed([ok, info])
    assert not suite_passed([ok, bad])


def test_json_export_parses():
    reports = run_identity("commutator", r=1, M=1)
    parsed = json.loads(reports_to_json(reports))
    assert parsed[0]["identity"] == "commutator"
    assert parsed[0]["status"] == "pass"
    assert parsed[0]["details"]["polynomial"] == ["1", "3", "3"]


def test_unknown_identity_raises():
    with pytest.raises(ValueError):
        run_identity("not-an-identity")


def test_alias_dispatch():
    reps = run_identity("shef", r=2, n=4)
    assert len(reps) == 1
    assert reps[0].identity == "sheffer"
    assert reps[0].parameters == {"r": 2, "n_max": 4}
    assert reps[0].status == "pass"


def test_example_id_dispatch():
    reps = run_identity("bessel-j0", lambda_order=5)
    assert len(reps) == 1
    assert reps[0].identity == "bessel-j0"
    assert reps[0].status == "pass"


def test_every_listed_id_dispatches():
    for identity in SUITE_IDS:
        reps = run_identity(identity) if identity not in (
            "commutator", "stirling-expansion", "examples", "graphs",
            "conjecture", "hyp-generating-function", "exp-kummer",
        ) else run_identity(identity, r=1, M=1, n=2)
        assert reps, identity
        assert all(r.status != "fail" for r in reps), identity


def test_commutator_covers_m_zero():
    rep = verify_commutator(1, 0)
    assert rep.status == "pass"
    assert rep.details["polynomial"] == ["1"]
    rep = verify_commutator(4, 3)
    assert rep.status == "pass"


def test_kummer_numeric_mode_for_half_integer():
    rep = verify_exp_on_kummer(Fraction(3, 2), x_order=10, lambda_order=4)
    assert rep.mode == "numeric"
    assert rep.status == "pass"
    assert rep.precision is not None and rep.tolerance is not None


def test_exp_on_monomial_grid():
    rep = verify_exp_on_monomial(6)
    assert rep.status == "pass"
    assert rep.parameters == {"n_max": 6}


def test_probe_is_informational_only():
    rep = conjecture_probe(1, 1, 2)
    assert rep.status == "informational"
    assert rep.ok
