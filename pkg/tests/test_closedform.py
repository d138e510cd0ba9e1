"""Hypergeometric closed forms, worked expansions, and probe plumbing."""

from fractions import Fraction

import pytest

from normord.closedform import (
    CLOSED_FORM_KINDS,
    EXAMPLE_IDS,
    bessel_parity_check,
    conjecture_probe,
    example_normal_forms,
    hyp_closed_form_check,
    hyp_generating_function_check,
    hyp_sum_adaptive,
    kummer_taylor,
)


def test_hyp_sum_adaptive_exponential():
    # upper = lower cancels to e^x
    val = hyp_sum_adaptive([Fraction(2)], [Fraction(2)], Fraction(1), prec=40)
    e_partial = sum(Fraction(1, _fact(k)) for k in range(60))
    assert abs(val - e_partial) < Fraction(1, 10**40)


def _fact(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def test_hyp_sum_adaptive_guards():
    with pytest.raises(ValueError):
        hyp_sum_adaptive([1, 2], [1], Fraction(1))  # p > q
    with pytest.raises(ValueError):
        hyp_sum_adaptive([-1], [1], Fraction(1))  # nonpositive parameter
    with pytest.raises(ValueError):
        hyp_sum_adaptive([1], [1], Fraction(-1))  # negative argument


def test_hyp_sum_adaptive_budget_exhaustion_is_loud():
    with pytest.raises(RuntimeError):
        hyp_sum_adaptive([1], [1], Fraction(50), max_terms=10)


def test_kummer_taylor():
    # 1F1(b;1;x) coefficients (b)_k / (k!)^2 at b = 3
    taylor = kummer_taylor(Fraction(3), 4)
    assert taylor == [1, 3, 3, Fraction(5, 3)]


@pytest.mark.parametrize("kind,M", [("stirling-hyp", 1), ("stirling-hyp", 3),
                                    ("bell-hyp-r1", 2)])
def test_exact_closed_forms(kind, M):
    rep = hyp_closed_form_check(kind, {"stirling-hyp": 1, "bell-hyp-r1": 1}[kind],
                                M, 4)
    assert rep["status"] == "pass"
    assert rep["mode"] == "exact"
    assert "tolerance" not in rep or rep.get("tolerance") is None


@pytest.mark.parametrize("kind,r,M,n", [("bell-hyp-r2", 2, 1, 3),
                                        ("bell-hyp-r3", 3, 1, 2)])
def test_numeric_closed_forms(kind, r, M, n):
    rep = hyp_closed_form_check(kind, r, M, n)
    assert rep["status"] == "pass"
    assert rep["mode"] == "numeric"
    assert rep["precision"] == 50
    assert rep["tolerance"] is not None
    from decimal import Decimal

    assert Decimal(rep["max_rel_dev"]) < Decimal("1e-30")


def test_closed_form_kind_and_r_must_agree():
    with pytest.raises(ValueError):
        hyp_closed_form_check("bell-hyp-r2", 1, 1, 3)
    with pytest.raises(ValueError):
        hyp_closed_form_check("nonsense", 1, 1, 3)


def test_generating_function_check_passes():
    rep = hyp_generating_function_check(1, 1, Fraction(1), 5)
    assert rep["status"] == "pass"
    assert rep["mode"] == "numeric"
    assert rep["first_mismatch"] is None


def test_generating_function_budget_report():
    rep = hyp_generating_function_check(1, 1, Fraction(1), 5, max_terms=3)
    assert rep["status"] == "fail"
    assert "tail bound" in rep["first_mismatch"]["reason"]


@pytest.mark.parametrize("example_id", EXAMPLE_IDS)
def test_examples_pass(example_id):
    rep = example_normal_forms(example_id, 5)
    assert rep["status"] == "pass", rep
    assert rep["first_mismatch"] is None


def test_example_unknown_id():
    with pytest.raises(ValueError):
        example_normal_forms("not-an-example", 4)


def test_example_mismatch_reporting_shape():
    # shrink the truncation to still-consistent orders; reports carry the
    # identity id and parameter block in every case
    rep = example_normal_forms("bessel-j0", 3)
    assert rep["identity"] == "bessel-j0"
    assert rep["status"] == "pass"
    assert "parameters" in rep and "orders" in rep


def test_bessel_parity():
    rep = bessel_parity_check(8)
    assert rep["status"] == "pass"


def test_conjecture_probe_shape():
    rep = conjecture_probe(2, 1, 2, (Fraction(1, 2), 1, 2, 3))
    assert rep["status"] == "informational"
    assert rep["identity"] == "conjecture-probe"
    assert len(rep["fitted_coefficients"]) == 2
    assert rep["residuals"]
    # residuals are tiny for the shapes the fit actually takes
    from decimal import Decimal

    assert Decimal(rep["max_rel_residual"]) < Decimal("1e-40")


def test_conjecture_probe_needs_enough_samples():
    with pytest.raises(ValueError):
        conjecture_probe(3, 1, 1, (1, 2))


def test_all_kinds_listed():
    assert set(CLOSED_FORM_KINDS) == {
        "stirling-hyp", "bell-hyp-r1", "bell-hyp-r2", "bell-hyp-r3",
    }
    assert len(EXAMPLE_IDS) == 8
