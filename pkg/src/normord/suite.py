"""Named verification drivers binding each operational identity to oracles.

Every driver returns an IdentityReport.  Exact-mode drivers compare
rationals or integer tables with no tolerance at all; numeric-mode
drivers always record the working precision and tolerance they used.
`run_suite` walks a fixed default grid, `run_identity` dispatches a
single named check with optional parameter overrides (the CLI entry).
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import closedform
from .closedform import (
    CLOSED_FORM_KINDS,
    DEFAULT_PRECISION,
    DEFAULT_TOLERANCE,
    EXAMPLE_IDS,
)
from .graphs import enumerate_graphs
from .laguerre import (
    DxOperator,
    apply_Dx,
    egf_bell_r1,
    eigenfunction_series,
    exp_D_r1_normal_form,
    exp_lambda_Dx,
    exp_lambda_Dx_columns,
)
from .series import (
    PolyQ,
    SeriesQ,
    binomial,
    factorial,
    laguerre_poly,
    phyperq_series,
    pochhammer,
)
from .stirling import (
    b_pp,
    classical_bell,
    gen_bell_number,
    gen_stirling,
    stirling1_signless,
)
from .weyl import NormalForm, diagonal_reduce, laguerre_derivative_nf

__all__ = [
    "IdentityReport",
    "verify_commutator",
    "verify_stirling_expansion",
    "verify_bell_first_kind",
    "verify_bell_diagonal_powers",
    "verify_laguerre_normal_form",
    "verify_exp_on_exponential",
    "verify_exp_on_kummer",
    "verify_exp_on_monomial",
    "verify_sheffer",
    "verify_egf",
    "verify_eigenfunction",
    "verify_example",
    "verify_bessel_parity",
    "verify_hyp_closed_form",
    "verify_hyp_generating_function",
    "verify_graph_enumeration",
    "conjecture_probe",
    "run_identity",
    "run_suite",
    "suite_passed",
    "reports_to_json",
    "SUITE_IDS",
]


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one identity check over one parameter set.

    mode is "exact" (rational/integer comparison, no tolerance exists),
    "numeric" (high-precision reals; precision and tolerance are always
    recorded), or "informational" (probes that cannot fail the suite).
    """

    identity: str
    parameters: dict
    mode: str
    status: str
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0
    precision: int | None = None
    tolerance: str | None = None

    def __post_init__(self):
        if self.mode not in ("exact", "numeric", "informational"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.status not in ("pass", "fail", "informational"):
            raise ValueError(f"unknown status {self.status!r}")
        if self.mode == "numeric" and (
            self.precision is None or self.tolerance is None
        ):
            raise ValueError("numeric reports must record precision and tolerance")

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_json_dict(self) -> dict:
        out = {
            "identity": self.identity,
            "parameters": self.parameters,
            "mode": self.mode,
            "status": self.status,
            "details": _jsonable(self.details),
            "elapsed": round(self.elapsed, 6),
        }
        if self.precision is not None:
            out["precision"] = self.precision
        if self.tolerance is not None:
            out["tolerance"] = self.tolerance
        return out


def _jsonable(value):
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (int, str, float, bool)) or value is None:
        return value
    return str(value)


def _finish(identity, parameters, mode, t0, mismatch, details=None, **numctx):
    details = dict(details or {})
    details.setdefault("first_mismatch", mismatch)
    return IdentityReport(
        identity,
        parameters,
        mode,
        "fail" if mismatch is not None else "pass",
        details,
        time.perf_counter() - t0,
        numctx.get("precision"),
        numctx.get("tolerance"),
    )


def _nf_mismatch(lhs: NormalForm, rhs: NormalForm, **tags):
    """First differing (dag, ann) entry between two normal forms, or None."""
    keys = sorted(set(lhs.terms) | set(rhs.terms), reverse=True)
    for key in keys:
        lv = lhs.terms.get(key, Fraction(0))
        rv = rhs.terms.get(key, Fraction(0))
        if lv != rv:
            out = {"dag": key[0], "ann": key[1], "left": str(lv), "right": str(rv)}
            out.update(tags)
            return out
    return None


def _poly_from_signless_rising(r: int) -> PolyQ:
    """prod_{p=1..r}(n+p) written out of first-kind signless numbers."""
    return PolyQ(stirling1_signless(r + 1, k) for k in range(1, r + 2))


def _poly_from_signed_falling(r: int) -> PolyQ:
    """n(n-1)...(n-r+1) as the signed first-kind sum; zero constant term."""
    coeffs = [Fraction(0)] * (r + 1)
    for k in range(1, r + 1):
        coeffs[k] = Fraction((-1) ** (r - k) * stirling1_signless(r, k))
    return PolyQ(coeffs)


def verify_commutator(r: int, M: int) -> IdentityReport:
    """[D, D-dagger] reduced to a polynomial in the number operator.

    The operator side is normal-ordered from scratch and diagonal-reduced;
    the reference polynomial (n+r)^2M * prod(n+p) - n^2M * n-falling-r is
    assembled purely from signless first-kind numbers.  At (r, M) = (1, 1)
    this is the 3n^2 + 3n + 1 difference of consecutive odd cubes.
    """
    t0 = time.perf_counter()
    params = {"r": r, "M": M}
    d = laguerre_derivative_nf(r, M)
    dd = d.dagger()
    oracle = diagonal_reduce(d * dd - dd * d)
    x = PolyQ((0, 1))
    shifted = PolyQ((r, 1))
    left = PolyQ.one()
    right = PolyQ.one()
    for _ in range(2 * M):
        left = left * shifted
        right = right * x
    ref = left * _poly_from_signless_rising(r) - right * _poly_from_signed_falling(r)
    mismatch = None
    if oracle != ref:
        mismatch = {
            "oracle": [str(c) for c in oracle.coeffs],
            "first_kind_form": [str(c) for c in ref.coeffs],
        }
    return _finish(
        "commutator",
        params,
        "exact",
        t0,
        mismatch,
        {"polynomial": [str(c) for c in oracle.coeffs]},
    )


def verify_stirling_expansion(r: int, M: int, n_max: int) -> IdentityReport:
    """[D(r,M)]^n normal-ordered from scratch against the triangle row.

    Coefficient of (ad)^k a^(k+rn) must be S_r^(M)(n, k); the weight-one
    expectation of each power must then be the Bell number.
    """
    t0 = time.perf_counter()
    params = {"r": r, "M": M, "n_max": n_max}
    d = laguerre_derivative_nf(r, M)
    power = NormalForm.one()
    bells = []
    mismatch = None
    for n in range(1, n_max + 1):
        power = power * d
        ref = NormalForm(
            {
                (k, k + r * n): Fraction(gen_stirling(r, M, n, k))
                for k in range(M * n + 1)
                if gen_stirling(r, M, n, k)
            }
        )
        mismatch = _nf_mismatch(power, ref, n=n)
        if mismatch is not None:
            break
        bell = power.expectation_at_one()
        if bell != gen_bell_number(r, M, n):
            mismatch = {
                "n": n,
                "left": str(bell),
                "right": str(gen_bell_number(r, M, n)),
                "where": "weight-one expectation",
            }
            break
        bells.append(int(bell))
    return _finish(
        "stirling-expansion", params, "exact", t0, mismatch, {"bell_values": bells}
    )


def verify_bell_first_kind(r: int, n_max: int) -> IdentityReport:
    """B_r(n) as a signless-first-kind transform of the classical Bells."""
    t0 = time.perf_counter()
    params = {"r": r, "n_max": n_max}
    mismatch = None
    values = []
    for n in range(n_max + 1):
        lhs = gen_bell_number(r, 1, n)
        rhs = sum(
            stirling1_signless(n + 1, p) * r ** (n - p + 1) * classical_bell(p - 1)
            for p in range(1, n + 2)
        )
        if lhs != rhs:
            mismatch = {"n": n, "left": str(lhs), "right": str(rhs)}
            break
        values.append(int(lhs))
    return _finish(
        "bell-first-kind", params, "exact", t0, mismatch, {"values": values}
    )


def verify_bell_diagonal_powers(M: int, n_max: int) -> IdentityReport:
    """B_1^(M)(n) equals the weight-one expectation of ((ad)^n a^n)^(M+1)."""
    t0 = time.perf_counter()
    params = {"M": M, "n_max": n_max}
    mismatch = None
    values = []
    for n in range(1, n_max + 1):
        lhs = gen_bell_number(1, M, n)
        rhs = b_pp(n, M + 1)
        if lhs != rhs:
            mismatch = {"n": n, "left": str(lhs), "right": str(rhs)}
            break
        values.append(int(lhs))
    return _finish(
        "bell-diagonal-powers", params, "exact", t0, mismatch, {"values": values}
    )


def verify_laguerre_normal_form(n_max: int) -> IdentityReport:
    """[D(1,1)]^n = n! sum_j L_n-coefficients (ad)^j a^(j+n), sign-adjusted."""
    t0 = time.perf_counter()
    params = {"n_max": n_max}
    d = laguerre_derivative_nf(1, 1)
    power = NormalForm.one()
    mismatch = None
    for n in range(1, n_max + 1):
        power = power * d
        lag = laguerre_poly(n)
        ref = NormalForm(
            {
                (j, j + n): factorial(n) * lag.coeff(j) * (-1) ** j
                for j in range(n + 1)
            }
        )
        mismatch = _nf_mismatch(power, ref, n=n)
        if mismatch is not None:
            break
    return _finish("laguerre-normal-form", params, "exact", t0, mismatch)


def verify_exp_on_exponential(
    b, x_order: int = 16, lambda_order: int = 8
) -> IdentityReport:
    """exp(t D_x) e^(-b x) against the closed bivariate coefficient grid.

    Columns m = 0..lambda_order are checked at every x power each column
    retains (a staircase wider than the rectangular bivariate truncation),
    and the rectangular object is cross-checked against its own columns.
    """
    t0 = time.perf_counter()
    b = Fraction(b)
    params = {"b": str(b), "x_order": x_order, "lambda_order": lambda_order}
    s = SeriesQ(x_order, [(-b) ** i / factorial(i) for i in range(x_order)])
    op = DxOperator(1, 1)
    cols = exp_lambda_Dx_columns(op, s, lambda_order)
    mismatch = None
    for m, col in enumerate(cols):
        for i in range(col.order):
            ref = (
                (-b) ** i
                / factorial(i)
                * Fraction((-1) ** m * binomial(i + m, m))
                * b**m
            )
            if col.coeffs[i] != ref:
                mismatch = {"x_power": i, "lambda_power": m,
                            "left": str(col.coeffs[i]), "right": str(ref)}
                break
        if mismatch is not None:
            break
    if mismatch is None:
        bi = exp_lambda_Dx(op, s, lambda_order)
        for i in range(bi.nx):
            for m in range(bi.ny):
                if bi.coeff(i, m) != cols[m].coeffs[i]:
                    mismatch = {"x_power": i, "lambda_power": m,
                                "where": "bivariate truncation"}
                    break
            if mismatch is not None:
                break
    return _finish("exp-exponential", params, "exact", t0, mismatch)


def verify_exp_on_kummer(
    b,
    x_order: int = 16,
    lambda_order: int = 8,
    precision: int = DEFAULT_PRECISION,
    tolerance=DEFAULT_TOLERANCE,
) -> IdentityReport:
    """exp(t D_x) 1F1(b;1;x) = (1-t)^(-b) 1F1(b;1;x/(1-t)) coefficientwise.

    Expanded right side: x^i t^m carries (b)_i/(i!)^2 * (b+i)_m / m!.
    Integer b is checked exactly; fractional b runs in numeric mode per
    the rational-inputs-exact / otherwise-tracked-precision contract,
    although the underlying arithmetic here is still rational.
    """
    t0 = time.perf_counter()
    b = Fraction(b)
    params = {"b": str(b), "x_order": x_order, "lambda_order": lambda_order}
    exact = b.denominator == 1
    s = phyperq_series([b], [Fraction(1)], x_order)
    cols = exp_lambda_Dx_columns(DxOperator(1, 1), s, lambda_order)
    mismatch = None
    worst = Fraction(0)
    for m, col in enumerate(cols):
        for i in range(col.order):
            ref = (
                pochhammer(b, i)
                / factorial(i) ** 2
                * pochhammer(b + i, m)
                / factorial(m)
            )
            got = col.coeffs[i]
            if exact:
                if got != ref:
                    mismatch = {"x_power": i, "lambda_power": m,
                                "left": str(got), "right": str(ref)}
                    break
            else:
                dev = abs(got - ref)
                scale = max(abs(ref), Fraction(1))
                if dev / scale > worst:
                    worst = dev / scale
                if dev / scale > tolerance:
                    mismatch = {"x_power": i, "lambda_power": m,
                                "left": str(got), "right": str(ref)}
                    break
        if mismatch is not None:
            break
    if exact:
        return _finish("exp-kummer", params, "exact", t0, mismatch)
    return _finish(
        "exp-kummer",
        params,
        "numeric",
        t0,
        mismatch,
        {"max_rel_dev": str(worst)},
        precision=precision,
        tolerance=str(tolerance),
    )


def verify_exp_on_monomial(n_max: int = 6) -> IdentityReport:
    """exp(y D_x) x^n = n! y^n L_n(-x/y), an exact bivariate polynomial.

    Per y power the left side carries (n falling m)^2 / m! on x^(n-m);
    the right side expands the Laguerre polynomial at -x/y and scales by
    n! y^n, landing on the same (x, y) grid.
    """
    t0 = time.perf_counter()
    params = {"n_max": n_max}
    op = DxOperator(1, 1)
    mismatch = None
    for n in range(n_max + 1):
        mono = SeriesQ(n + 1, [Fraction(0)] * n + [Fraction(1)])
        lhs = {}
        for m, col in enumerate(exp_lambda_Dx_columns(op, mono, n)):
            for i in range(col.order):
                if col.coeffs[i]:
                    lhs[(i, m)] = col.coeffs[i]
        lag = laguerre_poly(n)
        rhs = {}
        for k in range(n + 1):
            c = factorial(n) * lag.coeff(k) * (-1) ** k
            if c:
                rhs[(k, n - k)] = c
        if lhs != rhs:
            for key in sorted(set(lhs) | set(rhs)):
                if lhs.get(key, Fraction(0)) != rhs.get(key, Fraction(0)):
                    mismatch = {
                        "n": n,
                        "x_power": key[0],
                        "y_power": key[1],
                        "left": str(lhs.get(key, Fraction(0))),
                        "right": str(rhs.get(key, Fraction(0))),
                    }
                    break
            break
    return _finish("exp-monomial", params, "exact", t0, mismatch)


def verify_sheffer(r: int, n_max: int) -> IdentityReport:
    """Substitution-kernel closed form of exp(t D(r,1)) against the rewriter.

    The double-dot expansion g(t,a) exp(ad (T - a)) is unpacked one t power
    at a time; n! times the t^n coefficient must be the normal form of
    [D(r,1)]^n produced by the contraction oracle.
    """
    t0 = time.perf_counter()
    params = {"r": r, "n_max": n_max}
    rows = exp_D_r1_normal_form(r, n_max)
    d = laguerre_derivative_nf(r, 1)
    power = NormalForm.one()
    mismatch = None
    for n in range(n_max + 1):
        mismatch = _nf_mismatch(rows[n], power, n=n)
        if mismatch is not None:
            break
        power = power * d
    return _finish("sheffer", params, "exact", t0, mismatch)


def verify_egf(r: int, n_max: int) -> IdentityReport:
    """(1-rt)^(-1) exp((1-rt)^(-1/r) - 1) as the Bell-number EGF."""
    t0 = time.perf_counter()
    params = {"r": r, "n_max": n_max}
    series = egf_bell_r1(r, n_max + 1)
    mismatch = None
    values = []
    for n in range(n_max + 1):
        lhs = factorial(n) * series.coeffs[n]
        rhs = gen_bell_number(r, 1, n)
        if lhs != rhs:
            mismatch = {"n": n, "left": str(lhs), "right": str(rhs)}
            break
        values.append(int(lhs))
    return _finish("egf", params, "exact", t0, mismatch, {"values": values})


def verify_eigenfunction(r: int, M: int, order: int | None = None) -> IdentityReport:
    """D_x(r,M) fixes its 0F_(M+r-1) eigenfunction through the truncation."""
    t0 = time.perf_counter()
    if order is None:
        order = 32 - r
    params = {"r": r, "M": M, "order": order}
    e = eigenfunction_series(r, M, order)
    image = apply_Dx(DxOperator(r, M), e)
    mismatch = None
    for i in range(image.order):
        if image.coeffs[i] != e.coeffs[i]:
            mismatch = {"x_power": i, "left": str(image.coeffs[i]),
                        "right": str(e.coeffs[i])}
            break
    return _finish("eigenfunction", params, "exact", t0, mismatch)


def verify_example(
    example_id: str,
    lambda_order: int = 6,
    p: int = 2,
    M: int = 2,
    precision: int = DEFAULT_PRECISION,
    tolerance=DEFAULT_TOLERANCE,
) -> IdentityReport:
    """One worked operator-function expansion, wrapped as a suite report."""
    t0 = time.perf_counter()
    rep = closedform.example_normal_forms(
        example_id, lambda_order, p=p, M=M, precision=precision, tolerance=tolerance
    )
    return _wrap_closedform(rep, t0)


def verify_bessel_parity(lambda_order: int = 8) -> IdentityReport:
    """The two Bessel-type expansions are t -> -t images of each other."""
    t0 = time.perf_counter()
    return _wrap_closedform(closedform.bessel_parity_check(lambda_order), t0)


def verify_hyp_closed_form(
    kind: str,
    M: int = 1,
    n_max: int | None = None,
    x_samples=None,
    precision: int = DEFAULT_PRECISION,
    tolerance=DEFAULT_TOLERANCE,
) -> IdentityReport:
    """Hypergeometric closed form for a triangle row or Bell polynomial."""
    t0 = time.perf_counter()
    expected_r = {"stirling-hyp": 1, "bell-hyp-r1": 1, "bell-hyp-r2": 2,
                  "bell-hyp-r3": 3}
    if kind not in expected_r:
        raise ValueError(f"unknown closed-form kind {kind!r}")
    if n_max is None:
        n_max = {"stirling-hyp": 5, "bell-hyp-r1": 5, "bell-hyp-r2": 3,
                 "bell-hyp-r3": 2}[kind]
    rep = closedform.hyp_closed_form_check(
        kind,
        expected_r[kind],
        M,
        n_max,
        x_samples=x_samples,
        precision=precision,
        tolerance=tolerance,
    )
    return _wrap_closedform(rep, t0)


def verify_hyp_generating_function(
    r: int,
    M: int,
    x=1,
    lambda_order: int = 6,
    precision: int = DEFAULT_PRECISION,
    tolerance=DEFAULT_TOLERANCE,
) -> IdentityReport:
    """Dobinski-type generating function against the Bell polynomials."""
    t0 = time.perf_counter()
    rep = closedform.hyp_generating_function_check(
        r, M, Fraction(x), lambda_order, precision=precision, tolerance=tolerance
    )
    return _wrap_closedform(rep, t0)


def verify_graph_enumeration(r: int, M: int, n_max: int) -> IdentityReport:
    """Weighted-graph expansion of [D(r,M)]^n against the rewriting oracle.

    Every multiplicity table must reproduce the oracle normal form entry
    by entry, and the total weights are recorded (they are the Bell
    numbers, restating the weight-one expectation).
    """
    t0 = time.perf_counter()
    params = {"r": r, "M": M, "n_max": n_max}
    d = laguerre_derivative_nf(r, M)
    power = NormalForm.one()
    totals = []
    mismatch = None
    for n in range(1, n_max + 1):
        power = power * d
        table = enumerate_graphs(d, n)
        mismatch = _nf_mismatch(table.to_normal_form(), power, n=n)
        if mismatch is not None:
            break
        totals.append(int(table.total_weight))
    return _finish("graphs", params, "exact", t0, mismatch, {"totals": totals})


def conjecture_probe(
    r: int,
    M: int,
    n: int,
    x_samples=(Fraction(1, 2), 1, 2, 3, 4),
    precision: int = DEFAULT_PRECISION,
) -> IdentityReport:
    """Informational fit of the conjectured higher-order closed-form shape."""
    t0 = time.perf_counter()
    rep = closedform.conjecture_probe(r, M, n, x_samples, precision=precision)
    return _wrap_closedform(rep, t0)


def _wrap_closedform(rep: dict, t0: float) -> IdentityReport:
    details = {
        k: v
        for k, v in rep.items()
        if k not in ("identity", "parameters", "mode", "status", "precision",
                     "tolerance")
    }
    params = dict(rep.get("parameters", {}))
    orders = rep.get("orders")
    if isinstance(orders, dict):
        params.update(orders)
        details.pop("orders", None)
    mode = rep["mode"]
    status = rep["status"]
    precision = rep.get("precision")
    tolerance = rep.get("tolerance")
    if mode == "numeric" and precision is None:
        precision = DEFAULT_PRECISION
    if mode == "numeric" and tolerance is None:
        tolerance = str(DEFAULT_TOLERANCE)
    return IdentityReport(
        rep["identity"],
        _jsonable(params),
        mode,
        status,
        _jsonable(details),
        time.perf_counter() - t0,
        precision,
        str(tolerance) if tolerance is not None else None,
    )


# ---------------------------------------------------------------------------
# dispatch

SUITE_IDS = (
    "commutator",
    "stirling-expansion",
    "bell-first-kind",
    "bell-diagonal-powers",
    "laguerre-normal-form",
    "exp-exponential",
    "exp-kummer",
    "exp-monomial",
    "sheffer",
    "egf",
    "eigenfunction",
    "examples",
    "bessel-parity",
    "stirling-hyp",
    "bell-hyp-r1",
    "bell-hyp-r2",
    "bell-hyp-r3",
    "hyp-generating-function",
    "graphs",
    "conjecture",
)

_ALIASES = {"shef": "sheffer"}


def _pick(value, default_list):
    return default_list if value is None else (value,)


def run_identity(
    identity: str,
    r: int | None = None,
    M: int | None = None,
    n: int | None = None,
    lambda_order: int | None = None,
    precision: int = DEFAULT_PRECISION,
    tolerance=DEFAULT_TOLERANCE,
) -> list[IdentityReport]:
    """Run one named identity (or one worked example) with overrides.

    Unspecified parameters fall back to the identity's default grid, so
    e.g. the bare commutator id sweeps r in 1..3 and M in 0..3 while
    passing r=2 pins the sweep to that single r.
    """
    identity = _ALIASES.get(identity, identity)
    reports: list[IdentityReport] = []
    if identity == "commutator":
        for rr in _pick(r, (1, 2, 3)):
            for mm in _pick(M, (0, 1, 2, 3)):
                reports.append(verify_commutator(rr, mm))
    elif identity == "stirling-expansion":
        for rr in _pick(r, (1, 2, 3)):
            for mm in _pick(M, (1, 2, 3)):
                reports.append(verify_stirling_expansion(rr, mm, n or 5))
    elif identity == "bell-first-kind":
        for rr in _pick(r, (1, 2, 3, 4)):
            reports.append(verify_bell_first_kind(rr, n or 8))
    elif identity == "bell-diagonal-powers":
        for mm in _pick(M, (1, 2, 3)):
            reports.append(verify_bell_diagonal_powers(mm, n or 4))
    elif identity == "laguerre-normal-form":
        reports.append(verify_laguerre_normal_form(n or 6))
    elif identity == "exp-exponential":
        for b in (1, 2, Fraction(1, 3)):
            reports.append(verify_exp_on_exponential(b, lambda_order=lambda_order or 8))
    elif identity == "exp-kummer":
        for b in (1, 2, 3, Fraction(3, 2)):
            reports.append(
                verify_exp_on_kummer(
                    b,
                    lambda_order=lambda_order or 8,
                    precision=precision,
                    tolerance=tolerance,
                )
            )
    elif identity == "exp-monomial":
        reports.append(verify_exp_on_monomial(n or 6))
    elif identity == "sheffer":
        for rr in _pick(r, (1, 2, 3)):
            reports.append(verify_sheffer(rr, n or 5))
    elif identity == "egf":
        for rr in _pick(r, (1, 2, 3, 4)):
            reports.append(verify_egf(rr, n or 8))
    elif identity == "eigenfunction":
        pairs = ((1, 1), (1, 2), (2, 1), (2, 2), (3, 3))
        if r is not None or M is not None:
            pairs = tuple(
                (rr, mm) for rr in _pick(r, (1, 2, 3)) for mm in _pick(M, (1, 2, 3))
            )
        for rr, mm in pairs:
            reports.append(verify_eigenfunction(rr, mm))
    elif identity == "examples":
        for ex in EXAMPLE_IDS:
            reports.extend(
                run_identity(
                    ex,
                    r=r,
                    M=M,
                    n=n,
                    lambda_order=lambda_order,
                    precision=precision,
                    tolerance=tolerance,
                )
            )
    elif identity in EXAMPLE_IDS:
        lam = lambda_order or 6
        if identity == "laguerre-shifted":
            for p in _pick(n, (1, 2, 3)):
                reports.append(
                    verify_example(identity, lam, p=p, precision=precision,
                                   tolerance=tolerance)
                )
        elif identity in ("eigen-operator", "hyp-compact"):
            for mm in _pick(M, (1, 2, 3)):
                reports.append(
                    verify_example(identity, min(lam, 5) if lambda_order is None
                                   else lam,
                                   M=mm, precision=precision, tolerance=tolerance)
                )
        else:
            reports.append(
                verify_example(identity, lam, precision=precision,
                               tolerance=tolerance)
            )
    elif identity == "bessel-parity":
        reports.append(verify_bessel_parity(lambda_order or 8))
    elif identity in CLOSED_FORM_KINDS:
        default_M = {"stirling-hyp": (1, 2, 3), "bell-hyp-r1": (1, 2, 3),
                     "bell-hyp-r2": (1, 2), "bell-hyp-r3": (1,)}[identity]
        for mm in _pick(M, default_M):
            reports.append(
                verify_hyp_closed_form(identity, mm, n, precision=precision,
                                       tolerance=tolerance)
            )
    elif identity == "hyp-generating-function":
        grid = ((1, 1), (1, 2), (2, 2))
        if r is not None or M is not None:
            grid = tuple(
                (rr, mm) for rr in _pick(r, (1, 2)) for mm in _pick(M, (1, 2))
            )
        for rr, mm in grid:
            reports.append(
                verify_hyp_generating_function(
                    rr, mm, 1, lambda_order or 6, precision=precision,
                    tolerance=tolerance
                )
            )
    elif identity == "graphs":
        for rr in _pick(r, (1, 2)):
            for mm in _pick(M, (1, 2)):
                reports.append(verify_graph_enumeration(rr, mm, n or 4))
    elif identity == "conjecture":
        probes = ((1, 1, 3), (2, 1, 2), (2, 2, 2), (3, 1, 1), (4, 1, 1))
        if r is not None:
            probes = tuple((r, mm, n or 1) for mm in _pick(M, (1,)))
        for rr, mm, nn in probes:
            reports.append(conjecture_probe(rr, mm, nn, precision=precision))
    else:
        raise ValueError(f"unknown identity {identity!r}")
    return reports


def run_suite(
    include_probes: bool = True,
    precision: int = DEFAULT_PRECISION,
    tolerance=DEFAULT_TOLERANCE,
) -> list[IdentityReport]:
    """Default verification sweep; deterministic report order."""
    reports: list[IdentityReport] = []
    ids = list(SUITE_IDS)
    if not include_probes:
        ids.remove("conjecture")
    for identity in ids:
        reports.extend(
            run_identity(identity, precision=precision, tolerance=tolerance)
        )
    reports.sort(
        key=lambda rep: (
            rep.identity,
            json.dumps(rep.parameters, sort_keys=True, default=str),
        )
    )
    return reports


def suite_passed(reports) -> bool:
    return all(rep.status != "fail" for rep in reports)


def reports_to_json(reports) -> str:
    return json.dumps([rep.to_json_dict() for rep in reports], indent=2)
